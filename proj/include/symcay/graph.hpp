#pragma once

// Undirected simple graphs on vertices 0..n-1 with sorted adjacency lists and
// a canonical sorted edge list (u < v, lex order).  Optional vertex labels are
// carried for human-readable output and never affect structure.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/permutation.hpp"

namespace symcay {

class Graph {
 public:
  Graph() : n_(0) {}

  Graph(int n, std::vector<std::pair<int, int>> edges,
        std::vector<std::string> labels = {}) {
    if (n < 0) throw hypothesis_error("graph needs a nonnegative vertex count");
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n))
      throw hypothesis_error("label count does not match vertex count");
    n_ = n;
    for (auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw hypothesis_error("edge endpoint out of range: {" + std::to_string(u) + ", " +
                               std::to_string(v) + "}");
      if (u == v) throw hypothesis_error("loop at vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
      throw hypothesis_error("duplicate edge {" + std::to_string(dup->first) + ", " +
                             std::to_string(dup->second) + "}");
    edges_ = std::move(edges);
    labels_ = std::move(labels);
    adj_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : edges_) {
      adj_[static_cast<std::size_t>(u)].push_back(v);
      adj_[static_cast<std::size_t>(v)].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
  }

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const {
    if (v < 0 || v >= n_) throw hypothesis_error("vertex out of range");
    return adj_[static_cast<std::size_t>(v)];
  }
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

  bool has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& a = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(a.begin(), a.end(), v);
  }

  bool is_regular() const {
    for (int v = 1; v < n_; ++v)
      if (degree(v) != degree(0)) return false;
    return true;
  }

  // Common degree of a regular graph.
  int valency() const {
    if (n_ == 0) throw hypothesis_error("valency of empty graph");
    if (!is_regular()) throw hypothesis_error("valency of a non-regular graph");
    return degree(0);
  }

  const std::vector<std::string>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  bool is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(n_), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj_[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          ++cnt;
          q.push(w);
        }
    }
    return cnt == n_;
  }

  // Connected components, each a sorted vertex list; sorted by least vertex.
  std::vector<std::vector<int>> components() const {
    std::vector<int> comp(static_cast<std::size_t>(n_), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n_; ++s) {
      if (comp[static_cast<std::size_t>(s)] >= 0) continue;
      int id = static_cast<int>(out.size());
      out.emplace_back();
      std::queue<int> q;
      q.push(s);
      comp[static_cast<std::size_t>(s)] = id;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        out[static_cast<std::size_t>(id)].push_back(u);
        for (int w : adj_[static_cast<std::size_t>(u)])
          if (comp[static_cast<std::size_t>(w)] < 0) {
            comp[static_cast<std::size_t>(w)] = id;
            q.push(w);
          }
      }
      std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
  }

  std::vector<int> bfs_distances(int src) const {
    std::vector<int> dist(static_cast<std::size_t>(n_), -1);
    std::queue<int> q;
    dist[static_cast<std::size_t>(src)] = 0;
    q.push(src);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : adj_[static_cast<std::size_t>(u)])
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
          q.push(w);
        }
    }
    return dist;
  }

  int girth() const {
    // Shortest cycle length via BFS from every vertex; -1 for forests.
    int best = -1;
    for (int s = 0; s < n_; ++s) {
      std::vector<int> dist(static_cast<std::size_t>(n_), -1), par(static_cast<std::size_t>(n_), -1);
      std::queue<int> q;
      dist[static_cast<std::size_t>(s)] = 0;
      q.push(s);
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[static_cast<std::size_t>(u)]) {
          if (w == par[static_cast<std::size_t>(u)]) continue;
          if (dist[static_cast<std::size_t>(w)] < 0) {
            dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
            par[static_cast<std::size_t>(w)] = u;
            q.push(w);
          } else {
            int cyc = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(w)] + 1;
            if (best < 0 || cyc < best) best = cyc;
          }
        }
      }
    }
    return best;
  }

  bool permutation_preserves_adjacency(const Permutation& p) const {
    if (p.degree() != n_) return false;
    for (auto [u, v] : edges_)
      if (!has_edge(p[u], p[v])) return false;
    return true;
  }

  Graph relabeled(const Permutation& p) const {
    if (p.degree() != n_) throw hypothesis_error("relabeling degree mismatch");
    std::vector<std::pair<int, int>> es;
    es.reserve(edges_.size());
    for (auto [u, v] : edges_) es.emplace_back(p[u], p[v]);
    std::vector<std::string> labs;
    if (has_labels()) {
      labs.assign(static_cast<std::size_t>(n_), {});
      for (int v = 0; v < n_; ++v) labs[static_cast<std::size_t>(p[v])] = labels_[static_cast<std::size_t>(v)];
    }
    return Graph(n_, std::move(es), std::move(labs));
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
};

// Disjoint union; vertices of b are shifted by a.n().
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<std::pair<int, int>> es = a.edges();
  for (auto [u, v] : b.edges()) es.emplace_back(u + a.n(), v + a.n());
  return Graph(a.n() + b.n(), std::move(es));
}

}  // namespace symcay
