#pragma once

// Graph constructions: Cayley graphs, quotients by vertex partitions, covers,
// and a small zoo of named graphs used as comparison targets.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/gf.hpp"
#include "symcay/graph.hpp"
#include "symcay/limits.hpp"
#include "symcay/notation.hpp"
#include "symcay/perm_group.hpp"

namespace symcay {

// Cayley graph Cay(G, S): vertices are the elements of G sorted by image
// array (so vertex 0 is the identity), with x adjacent to s*x for s in S.
// Requires S inverse-closed, identity-free, and contained in G.
struct CayleyGraph {
  Graph graph;
  std::vector<Permutation> elements;          // vertex i is elements[i]
  std::vector<int> connection;                // vertex indices of S
  // Right-regular action of a group element on vertices: x -> x*a.
  Permutation regular_action(const Permutation& a) const {
    std::vector<int> img(elements.size());
    for (std::size_t i = 0; i < elements.size(); ++i) img[i] = index_of(elements[i] * a);
    return Permutation(std::move(img));
  }
  int index_of(const Permutation& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) throw hypothesis_error("element not in Cayley graph group");
    return it->second;
  }
  std::unordered_map<Permutation, int, PermutationHash> index_;
};

inline CayleyGraph cayley(const PermGroup& g, const std::vector<Permutation>& s,
                          bool with_labels = false) {
  if (s.empty()) throw hypothesis_error("empty connection set");
  for (const auto& x : s) {
    if (x.is_identity()) throw hypothesis_error("identity in connection set");
    if (!g.contains(x)) throw hypothesis_error("connection set element outside the group");
  }
  std::set<Permutation> sset(s.begin(), s.end());
  if (sset.size() != s.size()) throw hypothesis_error("duplicate connection set element");
  for (const auto& x : sset)
    if (!sset.count(x.inverse())) throw hypothesis_error("connection set not inverse-closed");

  CayleyGraph out;
  out.elements = g.elements();
  const int n = static_cast<int>(out.elements.size());
  out.index_.reserve(out.elements.size() * 2);
  for (int i = 0; i < n; ++i) out.index_.emplace(out.elements[static_cast<std::size_t>(i)], i);

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (const auto& x : sset) {
      int j = out.index_.at(x * out.elements[static_cast<std::size_t>(i)]);
      if (i < j) edges.emplace_back(i, j);
    }
  }
  std::vector<std::string> labels;
  if (with_labels) {
    labels.reserve(out.elements.size());
    for (const auto& e : out.elements) labels.push_back(print_permutation(e));
  }
  out.graph = Graph(n, std::move(edges), std::move(labels));
  for (const auto& x : sset) out.connection.push_back(out.index_.at(x));
  std::sort(out.connection.begin(), out.connection.end());
  return out;
}

// Vertex partition given as a list of cells; must cover 0..n-1 exactly once.
inline void check_partition(int n, const std::vector<std::vector<int>>& parts) {
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (const auto& cell : parts) {
    if (cell.empty()) throw hypothesis_error("empty cell in partition");
    for (int v : cell) {
      if (v < 0 || v >= n) throw hypothesis_error("partition cell vertex out of range");
      if (seen[static_cast<std::size_t>(v)]) throw hypothesis_error("vertex repeated in partition");
      seen[static_cast<std::size_t>(v)] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[static_cast<std::size_t>(v)])
      throw hypothesis_error("vertex " + std::to_string(v) + " missing from partition");
}

// Simple quotient: cells become vertices; distinct cells are adjacent iff
// some edge joins them.
inline Graph quotient(const Graph& g, const std::vector<std::vector<int>>& parts) {
  check_partition(g.n(), parts);
  std::vector<int> cell_of(static_cast<std::size_t>(g.n()), -1);
  for (std::size_t c = 0; c < parts.size(); ++c)
    for (int v : parts[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
  std::set<std::pair<int, int>> qedges;
  for (auto [u, v] : g.edges()) {
    int a = cell_of[static_cast<std::size_t>(u)], b = cell_of[static_cast<std::size_t>(v)];
    if (a == b) continue;
    qedges.emplace(std::min(a, b), std::max(a, b));
  }
  return Graph(static_cast<int>(parts.size()),
               std::vector<std::pair<int, int>>(qedges.begin(), qedges.end()));
}

// Orbits of a vertex group as a partition usable by quotient().
inline std::vector<std::vector<int>> parts_from_orbits(const Graph& g, const PermGroup& group) {
  if (group.degree() != g.n()) throw hypothesis_error("group degree does not match graph");
  return group.orbits();
}

// Executable stand-in for the covering property along a quotient: both graphs
// regular with equal valency.
inline bool is_cover(const Graph& g, const std::vector<std::vector<int>>& parts) {
  Graph q = quotient(g, parts);
  if (q.n() == 0 || g.n() == 0) return false;
  if (!g.is_regular() || !q.is_regular()) return false;
  return g.valency() == q.valency();
}

// Canonical double cover (tensor with K2): vertices v and v+n, edges
// {u, v+n} and {v, u+n} for each original edge {u, v}.
inline Graph double_cover(const Graph& g) {
  std::vector<std::pair<int, int>> es;
  es.reserve(g.edge_count() * 2);
  for (auto [u, v] : g.edges()) {
    es.emplace_back(u, v + g.n());
    es.emplace_back(v, u + g.n());
  }
  return Graph(2 * g.n(), std::move(es));
}

// Lexicographic cycle C_m[2K1]: columns 0..m-1 of two vertices each (2i, 2i+1),
// consecutive columns joined completely.  Tetravalent for m >= 3.
inline Graph lex_cycle(int m) {
  if (m < 3) throw hypothesis_error("lex_cycle requires m >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i) {
    int ni = (i + 1) % m;
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) es.emplace_back(2 * i + j, 2 * ni + k);
  }
  return Graph(2 * m, std::move(es));
}

inline Graph cycle_graph(int m) {
  if (m < 3) throw hypothesis_error("cycle graph requires m >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i) es.emplace_back(i, (i + 1) % m);
  return Graph(m, std::move(es));
}

inline Graph complete_graph(int m) {
  if (m < 1) throw hypothesis_error("complete graph requires m >= 1");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) es.emplace_back(i, j);
  return Graph(m, std::move(es));
}

// K_{m,m} minus a perfect matching ("crown"): left i = vertex i, right j =
// vertex m+j, edges i ~ m+j for i != j.  Tetravalent for m = 5.
inline Graph crown_graph(int m) {
  if (m < 3) throw hypothesis_error("crown graph requires m >= 3");
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j) es.emplace_back(i, m + j);
  return Graph(2 * m, std::move(es));
}

// Points and lines of the projective plane of order 2, joined by
// NON-incidence: point u (nonzero vector of GF(2)^3, index 1..7) is adjacent
// to line f (nonzero functional, same indexing) iff f(u) != 0.  Each point
// lies on 3 lines, so non-incidence is 4-regular on 7+7 vertices.
inline Graph fano_nonincidence() {
  std::vector<std::pair<int, int>> es;
  for (int u = 1; u <= 7; ++u)
    for (int f = 1; f <= 7; ++f) {
      int dot = __builtin_popcount(static_cast<unsigned>(u & f)) & 1;
      if (dot != 0) es.emplace_back(u - 1, 7 + f - 1);
    }
  return Graph(14, std::move(es));
}

// Incidence graph of the projective plane of order 3: 13 points, 13 lines,
// point adjacent to the 4 lines through it.  Points are normalized nonzero
// vectors of GF(3)^3 (first nonzero coordinate 1), lines likewise as
// functionals; incidence is u.f == 0 (mod 3).
inline Graph pg23_incidence() {
  std::vector<std::array<int, 3>> pts;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        std::array<int, 3> v{a, b, c};
        int lead = -1;
        for (int i = 0; i < 3; ++i)
          if (v[static_cast<std::size_t>(i)] != 0) { lead = i; break; }
        if (lead < 0) continue;
        if (v[static_cast<std::size_t>(lead)] != 1) continue;
        pts.push_back(v);
      }
  // 13 normalized points; same list serves for lines.
  std::vector<std::pair<int, int>> es;
  for (std::size_t p = 0; p < pts.size(); ++p)
    for (std::size_t l = 0; l < pts.size(); ++l) {
      int dot = 0;
      for (int i = 0; i < 3; ++i) dot += pts[p][static_cast<std::size_t>(i)] * pts[l][static_cast<std::size_t>(i)];
      if (dot % 3 == 0) es.emplace_back(static_cast<int>(p), static_cast<int>(13 + l));
    }
  return Graph(26, std::move(es));
}

// Lookup by name: "K<m>", "C<m>", "crown<m>", "lexC<m>", "Q3",
// "petersen", "fano_nonincidence", "pg23_incidence".
inline Graph named_graph(const std::string& name) {
  auto num_suffix = [&](const std::string& prefix) -> int {
    if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return -1;
    int v = 0;
    for (std::size_t i = prefix.size(); i < name.size(); ++i) {
      if (name[i] < '0' || name[i] > '9') return -1;
      v = v * 10 + (name[i] - '0');
      if (v > 1000000) return -1;
    }
    return v;
  };
  if (int m = num_suffix("K"); m >= 1) return complete_graph(m);
  if (int m = num_suffix("C"); m >= 3) return cycle_graph(m);
  if (int m = num_suffix("crown"); m >= 3) return crown_graph(m);
  if (int m = num_suffix("lexC"); m >= 3) return lex_cycle(m);
  if (name == "Q3") {
    std::vector<std::pair<int, int>> es;
    for (int v = 0; v < 8; ++v)
      for (int b = 0; b < 3; ++b) {
        int w = v ^ (1 << b);
        if (v < w) es.emplace_back(v, w);
      }
    return Graph(8, std::move(es));
  }
  if (name == "petersen") {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
      es.emplace_back(i, (i + 1) % 5);
      es.emplace_back(5 + i, 5 + (i + 2) % 5);
      es.emplace_back(i, 5 + i);
    }
    return Graph(10, std::move(es));
  }
  if (name == "fano_nonincidence") return fano_nonincidence();
  if (name == "pg23_incidence") return pg23_incidence();
  throw hypothesis_error("unknown named graph: " + name);
}

}  // namespace symcay
