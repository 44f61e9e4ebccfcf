#pragma once

// Transitivity reports for a group acting on a graph: vertex/edge/arc orbit
// counts, maximal s-arc-transitivity, stabilizer order, and a coarse
// classification.  Also Aut(G,S) for Cayley data, normality of the regular
// subgroup inside the full automorphism group, and the valency-4 vertex
// stabilizer consistency table.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "symcay/automorphisms.hpp"
#include "symcay/errors.hpp"
#include "symcay/graph.hpp"
#include "symcay/graph_builders.hpp"
#include "symcay/limits.hpp"
#include "symcay/perm_group.hpp"

namespace symcay {

enum class Classification {
  normal_arc_transitive,
  arc_transitive,
  half_transitive,
  edge_only,
  vertex_only,
  none,
};

inline std::string to_string(Classification c) {
  switch (c) {
    case Classification::normal_arc_transitive: return "normal-arc-transitive";
    case Classification::arc_transitive: return "arc-transitive";
    case Classification::half_transitive: return "half-transitive";
    case Classification::edge_only: return "edge-only";
    case Classification::vertex_only: return "vertex-only";
    case Classification::none: return "none";
  }
  return "none";
}

struct TransitivityReport {
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool arc_transitive = false;
  int max_s = 0;  // largest s with s-arc-transitivity; 0 when not arc-transitive
  std::uint64_t stabilizer_order = 0;  // |X| / |orbit of vertex 0|
  Classification classification = Classification::none;
};

namespace detail {

// Orbit count of the generator-image action on an indexed point set.
template <typename Image>
inline int orbit_count(std::size_t num_points, const Image& image, std::size_t num_gens) {
  std::vector<int> id(num_points);
  for (std::size_t i = 0; i < num_points; ++i) id[i] = static_cast<int>(i);
  std::function<int(int)> find = [&](int v) {
    while (id[static_cast<std::size_t>(v)] != v) {
      id[static_cast<std::size_t>(v)] = id[static_cast<std::size_t>(id[static_cast<std::size_t>(v)])];
      v = id[static_cast<std::size_t>(v)];
    }
    return v;
  };
  for (std::size_t i = 0; i < num_points; ++i)
    for (std::size_t gi = 0; gi < num_gens; ++gi) {
      int a = find(static_cast<int>(i));
      int b = find(static_cast<int>(image(i, gi)));
      if (a != b) id[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    }
  int cnt = 0;
  for (std::size_t i = 0; i < num_points; ++i)
    if (find(static_cast<int>(i)) == static_cast<int>(i)) ++cnt;
  return cnt;
}

// s-arcs are walks (v0,...,vs) with v_{i+1} != v_{i-1}; enumerated as flat
// arrays of vertex sequences.
inline std::vector<std::vector<int>> extend_arcs(const Graph& g,
                                                 const std::vector<std::vector<int>>& arcs) {
  std::vector<std::vector<int>> out;
  for (const auto& a : arcs) {
    int tail = a.back();
    int prev = a.size() >= 2 ? a[a.size() - 2] : -1;
    for (int w : g.neighbors(tail)) {
      if (w == prev) continue;
      auto b = a;
      b.push_back(w);
      out.push_back(std::move(b));
    }
  }
  return out;
}

}  // namespace detail

// Every generator of x must act as an automorphism of g; otherwise the error
// names the generator index and one broken edge.
inline TransitivityReport transitivity(const Graph& g, const PermGroup& x, int max_s_cap = 7) {
  if (x.degree() != g.n())
    throw hypothesis_error("group degree " + std::to_string(x.degree()) +
                           " does not match vertex count " + std::to_string(g.n()));
  const auto& gens = x.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& p = gens[i];
    for (auto [u, v] : g.edges())
      if (!g.has_edge(p[u], p[v]))
        throw hypothesis_error("generator " + std::to_string(i) + " maps edge {" +
                               std::to_string(u) + "," + std::to_string(v) +
                               "} to a non-edge {" + std::to_string(p[u]) + "," +
                               std::to_string(p[v]) + "}");
  }

  TransitivityReport rep;
  if (g.n() == 0) return rep;
  rep.vertex_transitive = static_cast<int>(x.orbit(0).size()) == g.n();
  rep.stabilizer_order = x.order() / x.orbit(0).size();

  const auto& edges = g.edges();
  if (!edges.empty()) {
    std::unordered_map<std::uint64_t, std::size_t> eidx;
    eidx.reserve(edges.size() * 2);
    auto ekey = [&](int u, int v) {
      if (u > v) std::swap(u, v);
      return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(g.n()) +
             static_cast<std::uint64_t>(v);
    };
    for (std::size_t i = 0; i < edges.size(); ++i) eidx[ekey(edges[i].first, edges[i].second)] = i;
    auto eimage = [&](std::size_t i, std::size_t gi) {
      const auto& p = gens[gi];
      return eidx.at(ekey(p[edges[i].first], p[edges[i].second]));
    };
    rep.edge_transitive = detail::orbit_count(edges.size(), eimage, gens.size()) == 1;
  }

  // s-arc transitivity, s = 1, 2, ... up to the cap.
  if (!edges.empty() && rep.edge_transitive) {
    std::vector<std::vector<int>> arcs;
    arcs.reserve(edges.size() * 2);
    for (auto [u, v] : edges) {
      arcs.push_back({u, v});
      arcs.push_back({v, u});
    }
    for (int s = 1; s <= max_s_cap; ++s) {
      if (arcs.size() > 4000000) throw bound_error("s-arc enumeration too large");
      if (arcs.empty()) break;
      std::map<std::vector<int>, std::size_t> aidx;
      for (std::size_t i = 0; i < arcs.size(); ++i) aidx[arcs[i]] = i;
      auto aimage = [&](std::size_t i, std::size_t gi) {
        const auto& p = gens[gi];
        std::vector<int> img(arcs[i].size());
        for (std::size_t t = 0; t < arcs[i].size(); ++t) img[t] = p[arcs[i][t]];
        return aidx.at(img);
      };
      if (detail::orbit_count(arcs.size(), aimage, gens.size()) != 1) break;
      rep.max_s = s;
      if (s == 1) rep.arc_transitive = true;
      arcs = detail::extend_arcs(g, arcs);
    }
  }

  if (rep.arc_transitive)
    rep.classification = Classification::arc_transitive;
  else if (rep.vertex_transitive && rep.edge_transitive)
    rep.classification = Classification::half_transitive;
  else if (rep.edge_transitive)
    rep.classification = Classification::edge_only;
  else if (rep.vertex_transitive)
    rep.classification = Classification::vertex_only;
  else
    rep.classification = Classification::none;
  return rep;
}

// Transitivity under the full automorphism group.
inline TransitivityReport classify(const Graph& g) {
  return transitivity(g, automorphism_group(g));
}

// All automorphisms of the abstract group generated by cayley data that fix
// the connection set setwise, returned as permutations of g.elements().
// Requires the connection set to generate (the Cayley graph is connected).
inline PermGroup aut_G_S(const PermGroup& g, const std::vector<Permutation>& s,
                         std::size_t bound = 0) {
  if (bound == 0) bound = limits().max_aut_gs_order;
  if (g.order() > bound)
    throw bound_error("group order " + std::to_string(g.order()) +
                      " above the Aut(G,S) bound " + std::to_string(bound));
  if (s.empty()) throw hypothesis_error("empty connection set");
  for (const auto& a : s) {
    if (!g.contains(a)) throw hypothesis_error("connection set element outside the group");
    if (a.is_identity()) throw hypothesis_error("identity in connection set");
  }
  if (PermGroup::generated(s, g.degree()).order() != g.order())
    throw hypothesis_error("connection set does not generate the group");

  const auto elems = g.elements();
  const std::size_t n = elems.size();
  std::unordered_map<Permutation, int, PermutationHash> index;
  index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index[elems[i]] = static_cast<int>(i);
  std::size_t id_pos = n;
  for (std::size_t i = 0; i < n; ++i)
    if (elems[i].is_identity()) id_pos = i;
  if (id_pos == n) throw error("identity missing from element list");

  std::vector<int> s_idx;
  for (const auto& a : s) s_idx.push_back(index.at(a));
  std::sort(s_idx.begin(), s_idx.end());
  s_idx.erase(std::unique(s_idx.begin(), s_idx.end()), s_idx.end());

  // Minimal generating tuple drawn from s, greedily (larger subgroups first).
  std::vector<int> tuple;
  {
    PermGroup cur = PermGroup::generated({}, g.degree());
    for (int si : s_idx) {
      if (cur.order() == g.order()) break;
      if (cur.contains(elems[static_cast<std::size_t>(si)])) continue;
      tuple.push_back(si);
      std::vector<Permutation> tg;
      for (int t : tuple) tg.push_back(elems[static_cast<std::size_t>(t)]);
      cur = PermGroup::generated(tg, g.degree());
    }
    if (cur.order() != g.order()) throw error("generating tuple construction failed");
  }

  // BFS words over the tuple so every element is reached from the identity.
  std::vector<int> parent(n, -1), via(n, -1);
  {
    std::vector<int> queue{static_cast<int>(id_pos)};
    std::vector<char> seen(n, 0);
    seen[id_pos] = 1;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int e = queue[qi];
      for (std::size_t ti = 0; ti < tuple.size(); ++ti) {
        Permutation nx = elems[static_cast<std::size_t>(e)] * elems[static_cast<std::size_t>(tuple[ti])];
        int ni = index.at(nx);
        if (!seen[static_cast<std::size_t>(ni)]) {
          seen[static_cast<std::size_t>(ni)] = 1;
          parent[static_cast<std::size_t>(ni)] = e;
          via[static_cast<std::size_t>(ni)] = static_cast<int>(ti);
          queue.push_back(ni);
        }
      }
    }
    if (queue.size() != n) throw error("tuple closure did not cover the group");
  }

  // Candidate images restricted to the connection set (an automorphism fixing
  // S setwise maps tuple members into S), filtered by element order.
  std::vector<std::vector<int>> candidates;
  for (int t : tuple) {
    std::vector<int> c;
    auto ot = elems[static_cast<std::size_t>(t)].order();
    for (int si : s_idx)
      if (elems[static_cast<std::size_t>(si)].order() == ot) c.push_back(si);
    candidates.push_back(std::move(c));
  }

  std::vector<Permutation> found;
  std::vector<int> choice(tuple.size(), 0);
  std::vector<int> img(n);
  std::function<void(std::size_t)> trial = [&](std::size_t depth) {
    if (depth < tuple.size()) {
      for (int c : candidates[depth]) {
        choice[depth] = c;
        trial(depth + 1);
      }
      return;
    }
    // Extend the tuple images along the BFS tree, then verify everywhere.
    std::vector<int> bfs_order;
    bfs_order.reserve(n);
    {
      // rebuild order: any order where parent precedes child
      std::vector<std::vector<int>> kids(n);
      for (std::size_t i = 0; i < n; ++i)
        if (parent[i] >= 0) kids[static_cast<std::size_t>(parent[i])].push_back(static_cast<int>(i));
      std::vector<int> stack{static_cast<int>(id_pos)};
      while (!stack.empty()) {
        int e = stack.back();
        stack.pop_back();
        bfs_order.push_back(e);
        for (int k : kids[static_cast<std::size_t>(e)]) stack.push_back(k);
      }
    }
    img[id_pos] = static_cast<int>(id_pos);
    for (int e : bfs_order) {
      if (e == static_cast<int>(id_pos)) continue;
      int p = parent[static_cast<std::size_t>(e)];
      int ti = via[static_cast<std::size_t>(e)];
      Permutation val =
          elems[static_cast<std::size_t>(img[static_cast<std::size_t>(p)])] *
          elems[static_cast<std::size_t>(choice[static_cast<std::size_t>(ti)])];
      auto it = index.find(val);
      if (it == index.end()) throw error("image fell outside the group");
      img[static_cast<std::size_t>(e)] = it->second;
    }
    // homomorphism check on every (element, tuple generator) pair
    for (std::size_t e = 0; e < n; ++e)
      for (std::size_t ti = 0; ti < tuple.size(); ++ti) {
        int lhs = index.at(elems[e] * elems[static_cast<std::size_t>(tuple[ti])]);
        Permutation rhs = elems[static_cast<std::size_t>(img[e])] *
                          elems[static_cast<std::size_t>(choice[ti])];
        if (img[static_cast<std::size_t>(lhs)] != index.at(rhs)) return;
      }
    // bijectivity
    std::vector<char> hit(n, 0);
    for (std::size_t e = 0; e < n; ++e) {
      if (hit[static_cast<std::size_t>(img[e])]) return;
      hit[static_cast<std::size_t>(img[e])] = 1;
    }
    // S fixed setwise
    std::set<int> s_img;
    for (int si : s_idx) s_img.insert(img[static_cast<std::size_t>(si)]);
    if (!std::equal(s_img.begin(), s_img.end(), s_idx.begin(), s_idx.end())) return;
    found.emplace_back(std::vector<int>(img.begin(), img.end()));
  };
  trial(0);

  std::vector<Permutation> gens;
  for (auto& p : found)
    if (!p.is_identity()) gens.push_back(std::move(p));
  return PermGroup(static_cast<int>(n), gens);
}

// A Cayley graph is normal when the regular copy of G is normal in the full
// automorphism group: every Aut generator must conjugate each regular
// generator back into the regular copy.
inline bool is_normal_cayley(const CayleyGraph& cg, const PermGroup& regular,
                             const PermGroup& aut) {
  for (const auto& a : aut.generators())
    for (const auto& r : regular.generators())
      if (!regular.contains(r.conjugated_by(a))) return false;
  return true;
}

inline bool is_normal_cayley(const CayleyGraph& cg) {
  std::vector<Permutation> reg_gens;
  for (int si : cg.connection)
    reg_gens.push_back(cg.regular_action(cg.elements[static_cast<std::size_t>(si)]));
  PermGroup regular(cg.graph.n(), reg_gens);
  return is_normal_cayley(cg, regular, automorphism_group(cg.graph));
}

// Valency-4 vertex stabilizer orders admissible for (X,s)-arc-transitive
// graphs: s=2 -> 12 or 24; s=3 -> 36, 72 or 144; s=4 -> 432; s=7 -> 3^5*48.
inline bool stabilizer_consistency(const Graph& g, const PermGroup& x) {
  if (!g.is_connected() || !g.is_regular() || g.valency() != 4)
    throw hypothesis_error("stabilizer table applies to connected 4-valent graphs only");
  auto rep = transitivity(g, x);
  if (rep.max_s < 2)
    throw hypothesis_error("stabilizer table needs 2-arc-transitivity, got s = " +
                           std::to_string(rep.max_s));
  static const std::map<int, std::vector<std::uint64_t>> table{
      {2, {12, 24}}, {3, {36, 72, 144}}, {4, {432}}, {7, {11664}}};
  auto it = table.find(rep.max_s);
  if (it == table.end()) return false;
  const auto& ok = it->second;
  return std::find(ok.begin(), ok.end(), rep.stabilizer_order) != ok.end();
}

}  // namespace symcay
