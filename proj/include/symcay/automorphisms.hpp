#pragma once

// Automorphism groups and isomorphism testing by individualization-refinement
// backtracking.  Colors are canonical codes (ranks of sorted signatures), so
// equivalent colorings of isomorphic graphs refine to identical code vectors;
// node invariants along the leftmost path prune incompatible branches, orbit
// pruning with already-found automorphisms collapses sibling branches, and
// every emitted generator is verified to preserve adjacency.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symcay/errors.hpp"
#include "symcay/graph.hpp"
#include "symcay/limits.hpp"
#include "symcay/perm_group.hpp"

namespace symcay {
namespace detail {

// Replaces colors by the ranks of their (color, sorted-neighbor-colors)
// signatures, iterated to stability.
class ColorRefiner {
 public:
  explicit ColorRefiner(const Graph& g) : g_(g) {}

  static int cell_count(const std::vector<int>& color) {
    int mx = -1;
    for (int c : color) mx = std::max(mx, c);
    return mx + 1;
  }

  void refine(std::vector<int>& color) const {
    const int n = g_.n();
    int cells = cell_count(color);
    while (cells < n) {
      std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        auto& k = key[static_cast<std::size_t>(v)];
        k.push_back(color[static_cast<std::size_t>(v)]);
        for (int w : g_.neighbors(v)) k.push_back(color[static_cast<std::size_t>(w)]);
        std::sort(k.begin() + 1, k.end());
      }
      int next = rank_keys(key, color);
      if (next == cells) break;
      cells = next;
    }
  }

  // Adds BFS distance from v as a signature component, then re-refines.
  void individualize_and_refine(std::vector<int>& color, int v) const {
    const int n = g_.n();
    auto dist = g_.bfs_distances(v);
    std::vector<std::vector<int>> key(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) {
      int d = dist[static_cast<std::size_t>(u)];
      key[static_cast<std::size_t>(u)] = {color[static_cast<std::size_t>(u)], d < 0 ? n : d,
                                          u == v ? 1 : 0};
    }
    rank_keys(key, color);
    refine(color);
  }

  // Invariant of a colored node: hash of the sorted (color, cell size) list.
  static std::uint64_t node_invariant(const std::vector<int>& color) {
    std::map<int, int> hist;
    for (int c : color) ++hist[c];
    std::uint64_t h = 1469598103934665603ull;
    for (auto [c, cnt] : hist) {
      h = (h ^ static_cast<std::uint64_t>(c)) * 1099511628211ull;
      h = (h ^ static_cast<std::uint64_t>(cnt)) * 1099511628211ull;
    }
    return h;
  }

 private:
  // Overwrites color with the rank of each vertex's key; returns cell count.
  static int rank_keys(const std::vector<std::vector<int>>& key, std::vector<int>& color) {
    std::vector<const std::vector<int>*> sorted;
    sorted.reserve(key.size());
    for (const auto& k : key) sorted.push_back(&k);
    std::sort(sorted.begin(), sorted.end(),
              [](const auto* a, const auto* b) { return *a < *b; });
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](const auto* a, const auto* b) { return *a == *b; }),
                 sorted.end());
    for (std::size_t v = 0; v < key.size(); ++v) {
      auto it = std::lower_bound(sorted.begin(), sorted.end(), &key[v],
                                 [](const auto* a, const auto* b) { return *a < *b; });
      color[v] = static_cast<int>(it - sorted.begin());
    }
    return static_cast<int>(sorted.size());
  }

  const Graph& g_;
};

class AutSearch {
 public:
  explicit AutSearch(const Graph& g) : g_(g), ref_(g) {}

  std::vector<Permutation> run() {
    const int n = g_.n();
    if (n == 0) return {};
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    ref_.refine(color);
    descend(std::move(color), 0, true);
    return gens_;
  }

 private:
  // Smallest non-singleton cell, ties by smallest color id; -1 if discrete.
  int select_cell(const std::vector<int>& color) const {
    std::map<int, int> hist;
    for (int c : color) ++hist[c];
    int best = -1, best_size = 0;
    for (auto [c, cnt] : hist)
      if (cnt > 1 && (best < 0 || cnt < best_size)) {
        best = c;
        best_size = cnt;
      }
    return best;
  }

  std::vector<int> cell_members(const std::vector<int>& color, int cell) const {
    std::vector<int> out;
    for (int v = 0; v < g_.n(); ++v)
      if (color[static_cast<std::size_t>(v)] == cell) out.push_back(v);
    return out;
  }

  bool handle_leaf(const std::vector<int>& color, bool on_left) {
    const int n = g_.n();
    std::vector<int> order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) order[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])] = v;
    if (on_left) {
      first_leaf_ = order;
      return false;
    }
    std::vector<int> img(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      img[static_cast<std::size_t>(first_leaf_[static_cast<std::size_t>(c)])] = order[static_cast<std::size_t>(c)];
    Permutation cand(std::move(img));
    if (!g_.permutation_preserves_adjacency(cand)) return false;
    if (cand.is_identity()) return false;
    gens_.push_back(std::move(cand));
    return true;
  }

  // Returns true (in non-left mode) when an automorphism was found; the left
  // path explores all siblings regardless, with orbit pruning.
  bool descend(std::vector<int> color, std::size_t depth, bool on_left) {
    std::uint64_t inv = ColorRefiner::node_invariant(color);
    if (on_left) {
      left_inv_.push_back(inv);
    } else {
      if (depth >= left_inv_.size() || left_inv_[depth] != inv) return false;
    }
    int cell = select_cell(color);
    if (cell < 0) return handle_leaf(color, on_left);

    std::vector<int> members = cell_members(color, cell);
    if (on_left) {
      int v0 = members[0];
      base_.push_back(v0);
      {
        std::vector<int> child = color;
        ref_.individualize_and_refine(child, v0);
        descend(std::move(child), depth + 1, true);
      }
      // Sibling branches: skip candidates in the orbit of an already-tried
      // vertex under the subgroup of found automorphisms fixing the base
      // prefix above this level.
      std::vector<int> tried{v0};
      for (std::size_t mi = 1; mi < members.size(); ++mi) {
        int v = members[mi];
        std::vector<int> orbit_id = prefix_orbits(depth);
        bool skip = false;
        for (int u : tried)
          if (orbit_id[static_cast<std::size_t>(u)] == orbit_id[static_cast<std::size_t>(v)]) {
            skip = true;
            break;
          }
        tried.push_back(v);
        if (skip) continue;
        std::vector<int> child = color;
        ref_.individualize_and_refine(child, v);
        descend(std::move(child), depth + 1, false);
      }
      return false;
    }
    for (int v : members) {
      std::vector<int> child = color;
      ref_.individualize_and_refine(child, v);
      if (descend(std::move(child), depth + 1, false)) return true;
    }
    return false;
  }

  // Orbit labels of the subgroup of found generators fixing base_[0..depth-1].
  std::vector<int> prefix_orbits(std::size_t depth) const {
    const int n = g_.n();
    std::vector<int> id(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) id[static_cast<std::size_t>(v)] = v;
    std::vector<const Permutation*> use;
    for (const auto& g : gens_) {
      bool fixes = true;
      for (std::size_t i = 0; i < depth && fixes; ++i)
        fixes = g[base_[i]] == base_[i];
      if (fixes) use.push_back(&g);
    }
    if (use.empty()) return id;
    // Union-find over generator images.
    std::function<int(int)> find = [&](int v) {
      while (id[static_cast<std::size_t>(v)] != v) {
        id[static_cast<std::size_t>(v)] = id[static_cast<std::size_t>(id[static_cast<std::size_t>(v)])];
        v = id[static_cast<std::size_t>(v)];
      }
      return v;
    };
    for (int v = 0; v < n; ++v)
      for (const auto* g : use) {
        int a = find(v), b = find((*g)[v]);
        if (a != b) id[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
      }
    for (int v = 0; v < n; ++v) id[static_cast<std::size_t>(v)] = find(v);
    return id;
  }

  const Graph& g_;
  ColorRefiner ref_;
  std::vector<Permutation> gens_;
  std::vector<int> first_leaf_;
  std::vector<std::uint64_t> left_inv_;
  std::vector<int> base_;
};

// Per-vertex closed-walk counts (diagonal of A^k for k = 2..kmax) plus traces:
// an isomorphism invariant used for fast negative certificates.
inline std::vector<std::vector<std::int64_t>> walk_profile(const Graph& g, int kmax = 8) {
  const int n = g.n();
  std::vector<std::vector<std::int64_t>> prof(static_cast<std::size_t>(n));
  // rows of A^k computed per source vertex to keep memory linear
  for (int s = 0; s < n; ++s) {
    std::vector<std::int64_t> row(static_cast<std::size_t>(n), 0), nxt(static_cast<std::size_t>(n), 0);
    row[static_cast<std::size_t>(s)] = 1;
    for (int k = 1; k <= kmax; ++k) {
      std::fill(nxt.begin(), nxt.end(), 0);
      for (int v = 0; v < n; ++v) {
        std::int64_t c = row[static_cast<std::size_t>(v)];
        if (c == 0) continue;
        for (int w : g.neighbors(v)) nxt[static_cast<std::size_t>(w)] += c;
      }
      std::swap(row, nxt);
      if (k >= 2) prof[static_cast<std::size_t>(s)].push_back(row[static_cast<std::size_t>(s)]);
    }
  }
  return prof;
}

inline std::uint64_t invariant_hash(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.n()), 0);
  if (g.n() > 0) ColorRefiner(g).refine(color);
  std::uint64_t h = ColorRefiner::node_invariant(color);
  auto prof = walk_profile(g, 6);
  std::sort(prof.begin(), prof.end());
  for (const auto& row : prof)
    for (std::int64_t v : row) h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
  h = (h ^ static_cast<std::uint64_t>(g.n())) * 1099511628211ull;
  h = (h ^ g.edge_count()) * 1099511628211ull;
  return h;
}

}  // namespace detail

// Full automorphism group; every generator is adjacency-verified and the
// order comes from a stabilizer chain over the returned generators.
inline PermGroup automorphism_group(const Graph& g) {
  if (g.n() > static_cast<int>(limits().max_aut_vertices))
    throw bound_error("graph has " + std::to_string(g.n()) +
                      " vertices, above the automorphism bound " +
                      std::to_string(limits().max_aut_vertices));
  detail::AutSearch search(g);
  auto gens = search.run();
  for (const auto& p : gens)
    if (!g.permutation_preserves_adjacency(p)) throw error("unverified automorphism generator");
  return PermGroup(std::max(g.n(), 0), gens);
}

namespace detail {

inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts,
                              std::vector<int>* back = nullptr) {
  std::unordered_map<int, int> idx;
  for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> es;
  for (auto [u, v] : g.edges()) {
    auto iu = idx.find(u), iv = idx.find(v);
    if (iu != idx.end() && iv != idx.end()) es.emplace_back(iu->second, iv->second);
  }
  if (back) *back = verts;
  return Graph(static_cast<int>(verts.size()), std::move(es));
}

std::optional<std::vector<int>> iso_connected(const Graph& g1, const Graph& g2);

inline std::optional<std::vector<int>> iso_disconnected(const Graph& g1, const Graph& g2) {
  auto comps1 = g1.components();
  auto comps2 = g2.components();
  if (comps1.size() != comps2.size()) return std::nullopt;
  // Group components by an isomorphism-invariant key, then match greedily
  // with backtracking inside key groups.
  auto key_of = [](const Graph& g, const std::vector<int>& comp) {
    Graph sub = induced_subgraph(g, comp);
    return std::make_pair(static_cast<int>(comp.size()), invariant_hash(sub));
  };
  std::vector<std::pair<int, std::uint64_t>> k1, k2;
  for (const auto& c : comps1) k1.push_back(key_of(g1, c));
  for (const auto& c : comps2) k2.push_back(key_of(g2, c));
  {
    auto s1 = k1, s2 = k2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;
  }
  std::vector<int> mapping(static_cast<std::size_t>(g1.n()), -1);
  std::vector<char> used(comps2.size(), 0);
  std::function<bool(std::size_t)> match = [&](std::size_t i) {
    if (i == comps1.size()) return true;
    for (std::size_t j = 0; j < comps2.size(); ++j) {
      if (used[j] || k1[i] != k2[j]) continue;
      if (comps1[i].size() != comps2[j].size()) continue;
      Graph a = induced_subgraph(g1, comps1[i]);
      Graph b = induced_subgraph(g2, comps2[j]);
      auto sub = iso_connected(a, b);
      if (!sub) continue;
      used[j] = 1;
      for (std::size_t t = 0; t < comps1[i].size(); ++t)
        mapping[static_cast<std::size_t>(comps1[i][t])] = comps2[j][static_cast<std::size_t>((*sub)[t])];
      if (match(i + 1)) return true;
      used[j] = 0;
      for (int v : comps1[i]) mapping[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  if (!match(0)) return std::nullopt;
  return mapping;
}

inline std::optional<std::vector<int>> iso_connected(const Graph& g1, const Graph& g2) {
  // Automorphisms of the disjoint union mixing the two sides are exactly the
  // isomorphisms; search the union and look for one moving vertex 0 across.
  Graph u = disjoint_union(g1, g2);
  AutSearch search(u);
  auto gens = search.run();
  PermGroup aut(u.n(), gens);
  const int n1 = g1.n();
  for (int t = n1; t < u.n(); ++t) {
    auto w = aut.orbit_witness(0, t);
    if (!w) continue;
    std::vector<int> mapping(static_cast<std::size_t>(n1));
    for (int v = 0; v < n1; ++v) {
      int img = (*w)[v];
      if (img < n1) throw error("union automorphism does not move the whole component");
      mapping[static_cast<std::size_t>(v)] = img - n1;
    }
    return mapping;
  }
  return std::nullopt;
}

}  // namespace detail

// Explicit vertex bijection g1 -> g2, or std::nullopt when the graphs are
// definitely non-isomorphic.  The returned mapping is edge-verified.
inline std::optional<std::vector<int>> are_isomorphic(const Graph& g1, const Graph& g2) {
  if (g1.n() != g2.n() || g1.edge_count() != g2.edge_count()) return std::nullopt;
  if (g1.n() == 0) return std::vector<int>{};
  if (g1.n() + g2.n() > 2 * static_cast<int>(limits().max_aut_vertices))
    throw bound_error("graphs too large for isomorphism search");
  {
    auto d1 = std::vector<int>(), d2 = std::vector<int>();
    for (int v = 0; v < g1.n(); ++v) d1.push_back(g1.degree(v));
    for (int v = 0; v < g2.n(); ++v) d2.push_back(g2.degree(v));
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return std::nullopt;
  }
  {
    auto p1 = detail::walk_profile(g1);
    auto p2 = detail::walk_profile(g2);
    std::sort(p1.begin(), p1.end());
    std::sort(p2.begin(), p2.end());
    if (p1 != p2) return std::nullopt;
  }
  std::optional<std::vector<int>> mapping;
  if (g1.is_connected() && g2.is_connected()) {
    mapping = detail::iso_connected(g1, g2);
  } else if (g1.is_connected() != g2.is_connected()) {
    return std::nullopt;
  } else {
    mapping = detail::iso_disconnected(g1, g2);
  }
  if (!mapping) return std::nullopt;
  // Verify: bijection preserving edges both ways (counts equal, so edges map
  // onto edges bijectively).
  std::vector<char> hit(static_cast<std::size_t>(g2.n()), 0);
  for (int v : *mapping) {
    if (v < 0 || v >= g2.n() || hit[static_cast<std::size_t>(v)]) throw error("isomorphism mapping is not a bijection");
    hit[static_cast<std::size_t>(v)] = 1;
  }
  for (auto [u, v] : g1.edges())
    if (!g2.has_edge((*mapping)[static_cast<std::size_t>(u)], (*mapping)[static_cast<std::size_t>(v)]))
      throw error("isomorphism mapping does not preserve an edge");
  return mapping;
}

}  // namespace symcay
