#pragma once

// Catalog of graph families and worked examples.  Each entry packages a graph
// with two vertex groups (X acting edge-transitively, G acting regularly) and
// a manifest of expected values; verify() replays every manifest claim against
// freshly computed values and reports each one pass/fail.  A failed claim is
// report content, never an exception: only malformed parameters or resource
// bounds throw.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "symcay/automorphisms.hpp"
#include "symcay/coset_graph.hpp"
#include "symcay/errors.hpp"
#include "symcay/graph_builders.hpp"
#include "symcay/group_builders.hpp"
#include "symcay/json_io.hpp"
#include "symcay/transitivity.hpp"

namespace symcay {

using Params = std::map<std::string, long long>;

// Claims an entry makes about itself.  Mandatory fields are checked for every
// entry; optional fields only when set.  "Full" level claims (automorphism
// group order, classification, normal-Cayley, Aut(G,S) bound, stabilizer
// table) need the whole automorphism group and run only at that level.
struct Expected {
  long long vertices = 0;
  int valency = 4;
  bool connected = true;
  bool x_edge_transitive = true;
  std::optional<bool> x_vertex_transitive;
  std::optional<bool> x_arc_transitive;
  std::optional<int> min_s;                      // (X,s)-arc-transitive for this s
  std::optional<std::uint64_t> x_vertex_stabilizer;
  std::optional<bool> g_normal_in_x;
  std::optional<std::string> quotient_model;     // named graph for quotient by W-orbits
  std::optional<bool> cover;                     // graph covers that quotient
  std::optional<std::uint64_t> aut_order;
  std::optional<std::string> classification;
  std::optional<bool> normal_cayley;
  std::optional<std::uint64_t> aut_g_s_bound;    // |Aut(G,S)| <= bound
  bool stabilizer_table = false;                 // vertex stabilizer order admissible
};

struct ClaimItem {
  std::string claim, expected, computed;
  bool pass = false;
};

struct CatalogEntry {
  std::string name;
  Params params;
  Graph graph;
  PermGroup X, G;              // vertex actions; G is expected to be regular
  std::optional<PermGroup> W;  // vertex action used for quotient claims
  // The same groups in their defining representation (projective line, block
  // points, field points, ...).  Subgroup and normality claims run here: the
  // degree is small, so stabilizer chains stay cheap, and for coset actions
  // with a kernel this is the honest domain for group-theoretic statements.
  PermGroup x_source, g_source;
  // Double-coset calculus recorded at build time for entries assembled from
  // (X, H, g) or (G, S) data: predicted valency vs the graph's, and the
  // generation criterion vs BFS connectivity.  Replayed into every report.
  std::vector<ClaimItem> construction_checks;
  Expected expected;
};

struct VerifyReport {
  std::string entry;
  Params params;
  std::string level;
  std::vector<ClaimItem> items;
  bool all_pass = true;
};

namespace detail {

inline std::string bstr(bool b) { return b ? "true" : "false"; }

inline std::vector<Permutation> sorted_elements(const PermGroup& g) {
  auto els = g.elements();
  std::sort(els.begin(), els.end());
  return els;
}

// First element of the given order satisfying pred, in image-lex order.
inline Permutation find_element(const std::vector<Permutation>& els, std::uint64_t ord,
                                const std::function<bool(const Permutation&)>& pred,
                                const std::string& what) {
  for (const auto& a : els)
    if (a.order() == ord && (!pred || pred(a))) return a;
  throw error("element search failed: " + what);
}

// Push a subgroup of the coset-graph group through to its vertex action.
// Only pass faithful = true when the coset action has trivial core on sub.
inline PermGroup vertex_group(const CosetGraph& cg, const PermGroup& sub, bool faithful = true) {
  std::vector<Permutation> gens;
  gens.reserve(sub.generators().size());
  for (const auto& a : sub.generators()) gens.push_back(cg.vertex_perm(a));
  PermGroup out(cg.graph.n(), std::move(gens));
  return faithful ? out.with_known_order(sub.order()) : out;
}

// For a regular vertex group: witness[v] is the unique element taking base to v.
inline std::vector<Permutation> regular_witnesses(const Graph& g, const PermGroup& reg, int base = 0) {
  const int n = g.n();
  if (reg.degree() != n) throw hypothesis_error("regular group degree does not match vertex count");
  if (reg.order() != static_cast<std::uint64_t>(n))
    throw hypothesis_error("group order does not match vertex count");
  std::vector<Permutation> wit(static_cast<std::size_t>(n), Permutation::identity(n));
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<int> queue{base};
  seen[static_cast<std::size_t>(base)] = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (const auto& a : reg.generators()) {
      int w = a[v];
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        wit[static_cast<std::size_t>(w)] = wit[static_cast<std::size_t>(v)] * a;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != static_cast<std::size_t>(n))
    throw hypothesis_error("group is not transitive on the vertices");
  return wit;
}

// View a graph with a regular vertex group as the Cayley graph it is; vertex
// numbering is preserved, the connection set is the base vertex's neighbors.
inline CayleyGraph cayley_view(const Graph& g, const PermGroup& reg) {
  CayleyGraph out;
  out.graph = g;
  out.elements = regular_witnesses(g, reg);
  for (int v : g.neighbors(0)) out.connection.push_back(v);
  for (std::size_t i = 0; i < out.elements.size(); ++i)
    out.index_[out.elements[i]] = static_cast<int>(i);
  return out;
}

// Record the double-coset calculus for a coset-built entry: the predicted
// valency must match the graph, and the generation criterion must match BFS
// connectivity.  Agreement is the claim; either truth value can agree.
inline void add_coset_checks(CatalogEntry& e, const PermGroup& x, const PermGroup& h,
                             const Permutation& g) {
  const int pv = predicted_valency(x, h, g);
  const bool reg = e.graph.is_regular();
  e.construction_checks.push_back({"valency_equals_double_coset_count", std::to_string(pv),
                                   reg ? std::to_string(e.graph.valency()) : "irregular",
                                   reg && e.graph.valency() == pv});
  const bool crit = connectivity_criterion(x, h, g);
  const bool conn = e.graph.is_connected();
  e.construction_checks.push_back(
      {"connectivity_equals_generation_criterion", bstr(crit), bstr(conn), crit == conn});
}

// Same calculus for a Cayley-built entry: valency is the connection set size,
// connectivity is generation of the group by the connection set.
inline void add_cayley_checks(CatalogEntry& e, const PermGroup& g,
                              const std::vector<Permutation>& s) {
  const bool reg = e.graph.is_regular();
  e.construction_checks.push_back({"valency_equals_connection_size", std::to_string(s.size()),
                                   reg ? std::to_string(e.graph.valency()) : "irregular",
                                   reg && e.graph.valency() == static_cast<int>(s.size())});
  const bool crit = PermGroup(g.degree(), s).order() == g.order();
  const bool conn = e.graph.is_connected();
  e.construction_checks.push_back(
      {"connectivity_equals_generation_criterion", bstr(crit), bstr(conn), crit == conn});
}

// Regular dihedral subgroup of order 2m inside a vertex group on 2m points:
// first order-m element r, then the first involution inverting r that makes
// the pair transitive.
inline PermGroup regular_dihedral_in(const PermGroup& aut, int m) {
  auto els = sorted_elements(aut);
  Permutation r = find_element(els, static_cast<std::uint64_t>(m), {}, "rotation of order " + std::to_string(m));
  for (const auto& s : els) {
    if (s.order() != 2 || !(r.conjugated_by(s) == r.inverse())) continue;
    PermGroup dg(aut.degree(), {r, s});
    if (dg.orbit(0).size() == static_cast<std::size_t>(aut.degree()) &&
        dg.order() == static_cast<std::uint64_t>(2 * m))
      return dg;
  }
  throw error("no regular dihedral subgroup of order " + std::to_string(2 * m));
}

}  // namespace detail

// ----- entry builders -----

inline const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{
      "gamma_2_p1_p", "gamma_p_2_n", "gamma_p_n",   "gamma_2_d_n",
      "gamma_p_4_5",  "gamma_p_4_10", "example_TA1", "example_TA2",
      "example_A",    "example_B",    "example_C",   "example_D",
      "half_transitive"};
  return names;
}

inline const std::map<std::string, Params>& catalog_defaults() {
  static const std::map<std::string, Params> table{
      {"gamma_2_p1_p", {{"p", 5}}},
      {"gamma_p_2_n", {{"p", 7}, {"ell", 1}, {"m", 3}, {"d", 3}}},
      {"gamma_p_n", {{"p", 13}, {"ell", 2}, {"m", 3}, {"d", 3}}},
      {"gamma_2_d_n", {{"d", 2}, {"n", 3}}},
      {"gamma_p_4_5", {{"p", 3}}},
      {"gamma_p_4_10", {{"p", 3}}},
      {"example_TA1", {}},
      {"example_TA2", {}},
      {"example_A", {}},
      {"example_B", {{"variant", 1}}},
      {"example_C", {{"q", 11}}},
      {"example_D", {}},
      {"half_transitive", {{"p", 3}, {"d", 3}, {"n", 13}, {"i", 1}}},
  };
  return table;
}

namespace detail {

inline CatalogEntry build_gamma_2_p1_p(const Params& pr) {
  const long long p = pr.at("p");
  auto c = affine_semilinear_group(p);
  const std::uint64_t q = c.field.size();
  if (q * static_cast<std::uint64_t>(p) > 20000)
    throw bound_error("coset space " + std::to_string(q * static_cast<std::uint64_t>(p)) +
                      " exceeds the 20000-vertex limit for this family");
  auto cg = coset_graph(c.X, c.H, c.edge);
  CatalogEntry e{"gamma_2_p1_p", pr, cg.graph, vertex_group(cg, c.X), vertex_group(cg, c.G), {},
                 c.X, c.G, {}, {}};
  add_coset_checks(e, c.X, c.H, c.edge);
  e.expected.vertices = static_cast<long long>(q) * p;
  e.expected.x_arc_transitive = false;
  e.expected.g_normal_in_x = true;
  e.expected.aut_g_s_bound = 8;
  return e;
}

inline CatalogEntry build_gamma_p_2_n(const Params& pr) {
  auto c = construction_group_im(pr.at("p"), static_cast<int>(pr.at("ell")),
                                 static_cast<int>(pr.at("m")), static_cast<int>(pr.at("d")));
  auto cg = coset_graph(c.X, c.N, c.y);
  CatalogEntry e{"gamma_p_2_n", pr, cg.graph, vertex_group(cg, c.X), vertex_group(cg, c.G),
                 vertex_group(cg, c.W), c.X, c.G, {}, {}};
  add_coset_checks(e, c.X, c.N, c.y);
  e.expected.vertices = static_cast<long long>(c.G.order());
  e.expected.g_normal_in_x = false;
  e.expected.quotient_model = "C" + std::to_string(c.n);
  e.expected.cover = false;
  return e;
}

inline CatalogEntry build_gamma_p_n(const Params& pr) {
  auto c = construction_group_yin(pr.at("p"), static_cast<int>(pr.at("ell")),
                                  static_cast<int>(pr.at("m")), static_cast<int>(pr.at("d")));
  auto cg = coset_graph(c.X, c.N, c.y);
  CatalogEntry e{"gamma_p_n", pr, cg.graph, vertex_group(cg, c.X), vertex_group(cg, c.G),
                 vertex_group(cg, c.W), c.X, c.G, {}, {}};
  add_coset_checks(e, c.X, c.N, c.y);
  e.expected.vertices = static_cast<long long>(c.G.order());
  e.expected.g_normal_in_x = false;
  e.expected.quotient_model = "lexC" + std::to_string(c.n / 2);
  return e;
}

inline CatalogEntry build_gamma_2_d_n(const Params& pr) {
  auto c = construction_group_d2p(static_cast<int>(pr.at("d")), pr.at("n"));
  // The coset action can have a kernel (the Klein group R is normal in X for
  // d = 2), so core-freeness is not asserted and vertex groups are chained.
  auto cg = coset_graph(c.X, c.R, c.h, /*check_corefree=*/false);
  CatalogEntry e{"gamma_2_d_n", pr, cg.graph, vertex_group(cg, c.X, false),
                 vertex_group(cg, c.G, false), vertex_group(cg, c.W, false), c.X, c.G, {}, {}};
  add_coset_checks(e, c.X, c.R, c.h);
  e.expected.vertices = static_cast<long long>(c.G.order());
  e.expected.g_normal_in_x = false;
  e.expected.quotient_model = "C" + std::to_string(c.n);
  return e;
}

inline CatalogEntry build_gamma_p_4_5(const Params& pr) {
  auto c = a5_module_group(pr.at("p"));
  auto cg = coset_graph(c.X, c.R, c.edge);
  CatalogEntry e{"gamma_p_4_5", pr, cg.graph, vertex_group(cg, c.X), vertex_group(cg, c.G),
                 vertex_group(cg, c.W), c.X, c.G, {}, {}};
  add_coset_checks(e, c.X, c.R, c.edge);
  e.expected.vertices = static_cast<long long>(c.X.order() / c.R.order());
  e.expected.min_s = 2;
  e.expected.x_vertex_stabilizer = 12;
  e.expected.g_normal_in_x = false;
  e.expected.quotient_model = "K5";
  e.expected.cover = true;
  e.expected.stabilizer_table = true;
  return e;
}

inline CatalogEntry build_gamma_p_4_10(const Params& pr) {
  auto c = s5_module_group(pr.at("p"));
  auto cg = coset_graph(c.X, c.R, c.edge);
  CatalogEntry e{"gamma_p_4_10", pr, cg.graph, vertex_group(cg, c.X), vertex_group(cg, c.G),
                 vertex_group(cg, c.W), c.X, c.G, {}, {}};
  add_coset_checks(e, c.X, c.R, c.edge);
  e.expected.vertices = static_cast<long long>(c.X.order() / c.R.order());
  e.expected.min_s = 2;
  e.expected.g_normal_in_x = false;
  e.expected.quotient_model = "crown5";
  e.expected.cover = true;
  return e;
}

inline CatalogEntry build_example_TA1(const Params& pr) {
  Graph g = fano_nonincidence();
  PermGroup aut = automorphism_group(g);
  PermGroup G = detail::regular_dihedral_in(aut, 7);
  CatalogEntry e{"example_TA1", pr, g, aut, G, {}, aut, G, {}, {}};
  e.expected.vertices = 14;
  e.expected.x_vertex_transitive = true;
  e.expected.aut_order = 336;
  return e;
}

inline CatalogEntry build_example_TA2(const Params& pr) {
  Graph g = pg23_incidence();
  PermGroup aut = automorphism_group(g);
  PermGroup G = detail::regular_dihedral_in(aut, 13);
  CatalogEntry e{"example_TA2", pr, g, aut, G, {}, aut, G, {}, {}};
  e.expected.vertices = 26;
  e.expected.x_arc_transitive = true;
  e.expected.aut_order = 11232;
  e.expected.classification = "arc-transitive";
  return e;
}

inline CatalogEntry build_example_A(const Params& pr) {
  PermGroup X = pgl2(7);
  PermGroup T = psl2(7);
  if (!T.is_subgroup_of(X)) throw error("projective actions disagree");
  auto xe = sorted_elements(X);

  Permutation x8 = find_element(xe, 8, {}, "order-8 element");
  Permutation t = find_element(xe, 2, [&](const Permutation& a) {
    return x8.conjugated_by(a) == x8.inverse();
  }, "reflection inverting the order-8 element");
  PermGroup H(X.degree(), {x8, t});
  if (H.order() != 16) throw error("Sylow 2-subgroup order mismatch");

  // Klein subgroup of H whose normalizer in X has order 24.
  auto he = sorted_elements(H);
  std::optional<PermGroup> K;
  for (std::size_t i = 0; i < he.size() && !K; ++i) {
    if (he[i].order() != 2) continue;
    for (std::size_t j = i + 1; j < he.size() && !K; ++j) {
      if (he[j].order() != 2 || !(he[i] * he[j] == he[j] * he[i])) continue;
      PermGroup cand(X.degree(), {he[i], he[j]});
      if (cand.order() == 4 && normalizer(X, cand).order() == 24) K = cand;
    }
  }
  if (!K) throw error("no Klein subgroup with normalizer of order 24");
  PermGroup NH = normalizer(H, *K);
  Permutation o = find_element(sorted_elements(NH), 2, [&](const Permutation& a) {
    return !K->contains(a);
  }, "involution normalizing the Klein subgroup outside it");
  PermGroup NX = normalizer(X, *K);
  Permutation z = find_element(sorted_elements(NX), 3, [&](const Permutation& a) {
    return a.conjugated_by(o) == a.inverse();
  }, "order-3 element inverted by the chosen involution");
  Permutation g = o * z;
  if (g.order() != 2) throw error("edge element is not an involution");

  auto cg = coset_graph(X, H, g);
  auto te = sorted_elements(T);
  Permutation r7 = find_element(te, 7, {}, "order-7 element");
  PermGroup G = normalizer(T, PermGroup(X.degree(), {r7}));
  if (G.order() != 21) throw error("regular subgroup order mismatch");

  CatalogEntry e{"example_A", pr, cg.graph, vertex_group(cg, X), vertex_group(cg, G), {}, X, G, {}, {}};
  add_coset_checks(e, X, H, g);
  e.expected.vertices = 21;
  e.expected.x_arc_transitive = true;
  e.expected.g_normal_in_x = false;
  e.expected.aut_order = 336;
  e.expected.classification = "arc-transitive";
  e.expected.normal_cayley = false;
  return e;
}

inline CatalogEntry build_example_B(const Params& pr) {
  const long long variant = pr.at("variant");
  if (variant != 1 && variant != 2) throw hypothesis_error("variant must be 1 or 2");
  PermGroup X = pgl2(7);
  PermGroup T = psl2(7);
  if (!T.is_subgroup_of(X)) throw error("projective actions disagree");
  auto te = sorted_elements(T);

  Permutation u = find_element(te, 4, {}, "order-4 element of the socle");
  Permutation t = find_element(te, 2, [&](const Permutation& a) {
    return u.conjugated_by(a) == u.inverse();
  }, "reflection inverting the order-4 element");
  PermGroup H(X.degree(), {u, t});
  if (H.order() != 8) throw error("dihedral subgroup order mismatch");
  Permutation uc = u * u;  // the central involution of H
  Permutation o = find_element(sorted_elements(H), 2, [&](const Permutation& a) {
    return !(a == uc);
  }, "non-central involution");

  PermGroup N = normalizer(X, PermGroup(X.degree(), {o}));
  if (N.order() != 16) throw error("involution normalizer order mismatch");
  auto ne = sorted_elements(N);
  Permutation z = find_element(ne, 2, [&](const Permutation& a) {
    return !T.contains(a);
  }, "involution outside the socle");
  Permutation y = find_element(ne, 4, {}, "order-4 element of the normalizer");
  Permutation x = (variant == 1) ? z : y * z;
  if (x.order() != 2) throw error("edge element is not an involution");

  auto cg = coset_graph(X, H, x);
  auto xe = sorted_elements(X);
  Permutation r7 = find_element(xe, 7, {}, "order-7 element");
  PermGroup G = normalizer(X, PermGroup(X.degree(), {r7}));
  if (G.order() != 42) throw error("regular subgroup order mismatch");

  CatalogEntry e{"example_B", pr, cg.graph, vertex_group(cg, X), vertex_group(cg, G), {}, X, G, {}, {}};
  add_coset_checks(e, X, H, x);
  e.expected.vertices = 42;
  e.expected.x_arc_transitive = true;
  e.expected.g_normal_in_x = false;
  e.expected.aut_order = 336;
  e.expected.classification = "arc-transitive";
  e.expected.normal_cayley = false;
  return e;
}

inline CatalogEntry build_example_C(const Params& pr) {
  const long long q = pr.at("q");
  if (q != 11 && q != 23) throw hypothesis_error("q must be 11 or 23");
  PermGroup X = (q == 11) ? pgl2(11) : psl2(23);
  PermGroup T = psl2(q);
  if (!T.is_subgroup_of(X)) throw error("projective actions disagree");
  auto xe = sorted_elements(X);

  // H = S4: the normalizer of a Klein subgroup, with every element order <= 4.
  std::optional<PermGroup> H;
  for (std::size_t i = 0; i < xe.size() && !H; ++i) {
    if (xe[i].order() != 2) continue;
    for (std::size_t j = i + 1; j < xe.size() && !H; ++j) {
      if (xe[j].order() != 2 || !(xe[i] * xe[j] == xe[j] * xe[i])) continue;
      PermGroup cand(X.degree(), {xe[i], xe[j]});
      if (cand.order() != 4) continue;
      PermGroup N = normalizer(X, cand);
      if (N.order() != 24) continue;
      bool small_orders = true;
      for (const auto& a : N.elements())
        if (a.order() > 4) small_orders = false;
      if (small_orders) H = N;
    }
  }
  if (!H) throw error("no Klein-normalizer subgroup of symmetric type");

  // L = S3 inside H with normalizer <o> x L of order 12, o an involution
  // centralizing L outside H.
  auto he = sorted_elements(*H);
  std::optional<Permutation> edge;
  for (const auto& c : he) {
    if (c.order() != 3) continue;
    for (const auto& d : he) {
      if (d.order() != 2 || !(c.conjugated_by(d) == c.inverse())) continue;
      PermGroup L(X.degree(), {c, d});
      if (L.order() != 6) continue;
      PermGroup NL = normalizer(X, L);
      if (NL.order() != 12) continue;
      for (const auto& a : sorted_elements(NL)) {
        if (a.order() == 2 && !H->contains(a) && a * c == c * a && a * d == d * a) {
          edge = a;
          break;
        }
      }
      if (edge) break;
    }
    if (edge) break;
  }
  if (!edge) throw error("no centralizing involution outside the chosen subgroup");

  auto cg = coset_graph(X, *H, *edge);
  auto te = sorted_elements(T);
  Permutation rq = find_element(te, static_cast<std::uint64_t>(q), {}, "full-order cycle element");
  PermGroup G = normalizer(T, PermGroup(X.degree(), {rq}));
  if (G.order() != static_cast<std::uint64_t>(q) * ((q - 1) / 2))
    throw error("regular subgroup order mismatch");

  CatalogEntry e{"example_C", pr, cg.graph, vertex_group(cg, X), vertex_group(cg, G), {}, X, G, {}, {}};
  add_coset_checks(e, X, *H, *edge);
  e.expected.vertices = (q == 11) ? 55 : 253;
  e.expected.x_arc_transitive = true;
  e.expected.g_normal_in_x = false;
  e.expected.aut_order = (q == 11) ? 1320 : 6072;
  e.expected.classification = "arc-transitive";
  return e;
}

inline CatalogEntry build_example_D(const Params& pr) {
  CatalogEntry base = build_example_C({{"q", 11}});
  const int n = base.graph.n();
  Graph g2 = double_cover(base.graph);

  auto lift = [&](const Permutation& a) {
    return perm_from_fn(2 * n, [&](int v) { return v < n ? a[v] : a[v - n] + n; });
  };
  Permutation eps = perm_from_fn(2 * n, [&](int v) { return v < n ? v + n : v - n; });

  std::vector<Permutation> xg;
  for (const auto& a : base.X.generators()) xg.push_back(lift(a));
  xg.push_back(eps);
  PermGroup X = PermGroup(2 * n, xg).with_known_order(base.X.order() * 2);

  // Regular group of order 2n: the lifted full-cycle normalizer, with its
  // order-10 part composed with the sheet swap.
  auto xe = sorted_elements(base.X);
  Permutation r = find_element(xe, 11, {}, "order-11 element");
  PermGroup NR = normalizer(base.X, PermGroup(n, {r}));
  if (NR.order() != 110) throw error("cycle normalizer order mismatch");
  Permutation s = find_element(sorted_elements(NR), 10, {}, "order-10 element");
  PermGroup G(2 * n, {lift(r), lift(s) * eps});
  if (G.order() != static_cast<std::uint64_t>(2 * n)) throw error("regular subgroup order mismatch");

  CatalogEntry e{"example_D", pr, g2, X, G, {}, X, G, {}, {}};
  e.expected.vertices = 2 * n;
  e.expected.x_arc_transitive = true;
  e.expected.g_normal_in_x = false;
  e.expected.aut_order = 2640;
  e.expected.classification = "arc-transitive";
  return e;
}

inline CatalogEntry build_half_transitive(const Params& pr) {
  const long long p = pr.at("p"), d = pr.at("d"), n = pr.at("n"), i = pr.at("i");
  if (p == 2) throw hypothesis_error("p must be odd");
  if (d <= 1 || d % 2 == 0) throw hypothesis_error("d must be odd and > 1");
  if (!is_primitive_divisor(n, p, static_cast<int>(d)))
    throw hypothesis_error("n is not a primitive divisor of p^d - 1");
  if (is_imprimitive_on_W(n, p, static_cast<int>(d)))
    throw hypothesis_error("multiplier action on the translation module is imprimitive");
  if (i < 1 || i > (n - 1) / 2) throw hypothesis_error("i must lie in [1, (n-1)/2]");
  if (std::gcd(i, n) != 1) throw hypothesis_error("i must be coprime to n");

  auto fb = frobenius_group(p, static_cast<int>(d), n);
  Permutation a = fb.w_gens[0];
  Permutation hi = fb.h.power(i);
  std::vector<Permutation> S{a * hi, a.inverse() * hi, (a * hi).inverse(),
                             (a.inverse() * hi).inverse()};
  auto cg = cayley(fb.G, S);
  const int nv = cg.graph.n();

  std::vector<Permutation> reg;
  for (const auto& ggen : fb.G.generators()) reg.push_back(cg.regular_action(ggen));
  PermGroup G = PermGroup(nv, reg).with_known_order(fb.G.order());

  // Negation of the field points inverts every translation and centralizes
  // the multiplier, so conjugation by it permutes the Cayley vertices.
  Permutation nu = perm_from_fn(static_cast<int>(fb.field.size()), [&](int v) {
    return static_cast<int>((-fb.field.from_index(static_cast<std::uint64_t>(v))).index());
  });
  Permutation tau = perm_from_fn(nv, [&](int v) {
    return cg.index_of(cg.elements[static_cast<std::size_t>(v)].conjugated_by(nu));
  });
  std::vector<Permutation> xg = reg;
  xg.push_back(tau);
  PermGroup X = PermGroup(nv, xg).with_known_order(fb.G.order() * 2);
  if (X.chain_order() != fb.G.order() * 2) throw error("extended group order mismatch");

  CatalogEntry e{"half_transitive", pr, cg.graph, X, G, {}, X, G, {}, {}};
  add_cayley_checks(e, fb.G, S);
  e.expected.vertices = static_cast<long long>(fb.G.order());
  e.expected.x_arc_transitive = false;
  e.expected.g_normal_in_x = true;
  e.expected.aut_order = fb.G.order() * 2;
  e.expected.classification = "half-transitive";
  e.expected.normal_cayley = true;
  return e;
}

}  // namespace detail

inline CatalogEntry build(const std::string& name, const Params& overrides = {}) {
  auto dit = catalog_defaults().find(name);
  if (dit == catalog_defaults().end()) throw hypothesis_error("unknown catalog entry: " + name);
  Params pr = dit->second;
  for (const auto& [k, v] : overrides) {
    if (!pr.count(k)) throw hypothesis_error("entry " + name + " has no parameter '" + k + "'");
    pr[k] = v;
  }
  if (name == "gamma_2_p1_p") return detail::build_gamma_2_p1_p(pr);
  if (name == "gamma_p_2_n") return detail::build_gamma_p_2_n(pr);
  if (name == "gamma_p_n") return detail::build_gamma_p_n(pr);
  if (name == "gamma_2_d_n") return detail::build_gamma_2_d_n(pr);
  if (name == "gamma_p_4_5") return detail::build_gamma_p_4_5(pr);
  if (name == "gamma_p_4_10") return detail::build_gamma_p_4_10(pr);
  if (name == "example_TA1") return detail::build_example_TA1(pr);
  if (name == "example_TA2") return detail::build_example_TA2(pr);
  if (name == "example_A") return detail::build_example_A(pr);
  if (name == "example_B") return detail::build_example_B(pr);
  if (name == "example_C") return detail::build_example_C(pr);
  if (name == "example_D") return detail::build_example_D(pr);
  return detail::build_half_transitive(pr);
}

// ----- verification -----

inline VerifyReport verify(const CatalogEntry& e, const std::string& level = "structural") {
  if (level != "structural" && level != "full")
    throw hypothesis_error("unknown verification level: " + level);
  VerifyReport rep{e.name, e.params, level, {}, true};
  auto add = [&](const std::string& claim, const std::string& want, const std::string& got,
                 bool pass) {
    rep.items.push_back({claim, want, got, pass});
    rep.all_pass = rep.all_pass && pass;
  };
  using detail::bstr;
  const Graph& g = e.graph;
  const Expected& ex = e.expected;

  for (const auto& it : e.construction_checks) add(it.claim, it.expected, it.computed, it.pass);

  add("vertices", std::to_string(ex.vertices), std::to_string(g.n()), g.n() == ex.vertices);
  const bool reg = g.is_regular();
  add("valency", std::to_string(ex.valency), reg ? std::to_string(g.valency()) : "irregular",
      reg && g.valency() == ex.valency);
  add("connected", bstr(ex.connected), bstr(g.is_connected()), g.is_connected() == ex.connected);

  const bool gsub = e.g_source.is_subgroup_of(e.x_source);
  add("g_subgroup_of_x", "true", bstr(gsub), gsub);
  const bool greg = e.G.order() == static_cast<std::uint64_t>(g.n()) &&
                    e.G.orbit(0).size() == static_cast<std::size_t>(g.n());
  add("g_vertex_regular", "true", bstr(greg), greg);

  // Arc orbits are only extended as deep as any claim needs; lists of s-arcs
  // grow geometrically, so an uncapped search on the large families is costly.
  TransitivityReport tr = transitivity(g, e.X, ex.min_s ? std::max(2, *ex.min_s) : 2);
  if (ex.x_vertex_transitive)
    add("x_vertex_transitive", bstr(*ex.x_vertex_transitive), bstr(tr.vertex_transitive),
        tr.vertex_transitive == *ex.x_vertex_transitive);
  add("x_edge_transitive", bstr(ex.x_edge_transitive), bstr(tr.edge_transitive),
      tr.edge_transitive == ex.x_edge_transitive);
  if (ex.x_arc_transitive)
    add("x_arc_transitive", bstr(*ex.x_arc_transitive), bstr(tr.arc_transitive),
        tr.arc_transitive == *ex.x_arc_transitive);
  if (ex.min_s)
    add("x_arc_transitivity_depth", ">= " + std::to_string(*ex.min_s), std::to_string(tr.max_s),
        tr.arc_transitive && tr.max_s >= *ex.min_s);
  if (ex.x_vertex_stabilizer)
    add("x_vertex_stabilizer", std::to_string(*ex.x_vertex_stabilizer),
        std::to_string(tr.stabilizer_order), tr.stabilizer_order == *ex.x_vertex_stabilizer);
  if (ex.g_normal_in_x) {
    const bool gnorm = is_normal_in(e.g_source, e.x_source);
    add("g_normal_in_x", bstr(*ex.g_normal_in_x), bstr(gnorm), gnorm == *ex.g_normal_in_x);
  }

  if (ex.quotient_model) {
    if (!e.W) throw error("entry lacks the vertex action needed for its quotient claim");
    auto parts = parts_from_orbits(g, *e.W);
    Graph q = quotient(g, parts);
    Graph model = named_graph(*ex.quotient_model);
    const bool iso = q.n() == model.n() && are_isomorphic(q, model).has_value();
    add("quotient_isomorphic_" + *ex.quotient_model, "true", bstr(iso), iso);
    if (ex.cover) {
      const bool cov = is_cover(g, parts);
      add("cover_of_quotient", bstr(*ex.cover), bstr(cov), cov == *ex.cover);
    }
  }

  if (level == "full") {
    std::optional<PermGroup> aut;
    if (ex.aut_order || ex.classification || ex.normal_cayley) aut = automorphism_group(g);
    if (ex.aut_order)
      add("aut_order", std::to_string(*ex.aut_order), std::to_string(aut->order()),
          aut->order() == *ex.aut_order);
    if (ex.classification) {
      TransitivityReport fr = transitivity(g, *aut);
      add("classification", *ex.classification, to_string(fr.classification),
          to_string(fr.classification) == *ex.classification);
    }
    if (ex.normal_cayley || ex.aut_g_s_bound) {
      CayleyGraph view = detail::cayley_view(g, e.G);
      if (ex.normal_cayley) {
        const bool nc = is_normal_cayley(view, e.G, *aut);
        add("normal_cayley", bstr(*ex.normal_cayley), bstr(nc), nc == *ex.normal_cayley);
      }
      if (ex.aut_g_s_bound) {
        std::vector<Permutation> s;
        for (int v : view.connection) s.push_back(view.elements[static_cast<std::size_t>(v)]);
        const std::uint64_t ago = aut_G_S(e.G, s).order();
        add("aut_g_s_order", "<= " + std::to_string(*ex.aut_g_s_bound), std::to_string(ago),
            ago <= *ex.aut_g_s_bound);
      }
    }
    if (ex.stabilizer_table) {
      try {
        const bool ok = stabilizer_consistency(g, e.X);
        add("stabilizer_order_admissible", "true", bstr(ok), ok);
      } catch (const hypothesis_error& err) {
        add("stabilizer_order_admissible", "true", std::string("error: ") + err.what(), false);
      }
    }
  }
  return rep;
}

inline ordered_json report_to_json(const VerifyReport& rep) {
  ordered_json j;
  j["entry"] = rep.entry;
  ordered_json pj = ordered_json::object();
  for (const auto& [k, v] : rep.params) pj[k] = v;
  j["params"] = pj;
  j["level"] = rep.level;
  ordered_json items = ordered_json::array();
  for (const auto& it : rep.items)
    items.push_back(ordered_json{{"claim", it.claim},
                                 {"expected", it.expected},
                                 {"computed", it.computed},
                                 {"pass", it.pass}});
  j["items"] = items;
  j["all_pass"] = rep.all_pass;
  return j;
}

inline std::string report_text(const VerifyReport& rep) {
  std::string out = rep.entry + " [" + rep.level + "]";
  for (const auto& [k, v] : rep.params) out += " " + k + "=" + std::to_string(v);
  out += "\n";
  for (const auto& it : rep.items)
    out += std::string(it.pass ? "  pass  " : "  FAIL  ") + it.claim + ": expected " +
           it.expected + ", computed " + it.computed + "\n";
  out += rep.all_pass ? "all claims hold\n" : "some claims FAILED\n";
  return out;
}

// ----- isomorphism classes of the half-transitive family -----

struct IsoClasses {
  std::vector<long long> valid;                 // admissible parameters i, ascending
  std::vector<std::vector<long long>> classes;  // partition by the p^k i = +-j rule
  std::vector<ClaimItem> checks;                // pairwise graph-isomorphism cross-checks
  bool all_pass = true;
};

inline IsoClasses iso_classes_half_transitive(long long p, long long d, long long n) {
  IsoClasses out;
  for (long long i = 1; i <= (n - 1) / 2; ++i)
    if (std::gcd(i, n) == 1) out.valid.push_back(i);
  if (out.valid.empty()) throw hypothesis_error("no admissible parameters i");

  // Rule closure of i: multiply by p and negate mod n, folded into [1,(n-1)/2].
  auto rule_class = [&](long long i) {
    std::vector<long long> orb{i};
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    seen[static_cast<std::size_t>(i)] = 1;
    for (std::size_t k = 0; k < orb.size(); ++k) {
      for (long long next : {orb[k] * p % n, (n - orb[k]) % n}) {
        if (next != 0 && !seen[static_cast<std::size_t>(next)]) {
          seen[static_cast<std::size_t>(next)] = 1;
          orb.push_back(next);
        }
      }
    }
    std::vector<long long> folded;
    for (long long v : orb)
      if (v <= (n - 1) / 2 && std::gcd(v, n) == 1) folded.push_back(v);
    std::sort(folded.begin(), folded.end());
    folded.erase(std::unique(folded.begin(), folded.end()), folded.end());
    return folded;
  };
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (long long i : out.valid) {
    if (placed[static_cast<std::size_t>(i)]) continue;
    auto cls = rule_class(i);
    for (long long v : cls) placed[static_cast<std::size_t>(v)] = 1;
    out.classes.push_back(std::move(cls));
  }

  std::map<long long, Graph> graphs;
  std::map<long long, std::size_t> class_of;
  for (std::size_t c = 0; c < out.classes.size(); ++c)
    for (long long v : out.classes[c]) class_of[v] = c;
  for (long long i : out.valid)
    graphs.emplace(i, build("half_transitive", {{"p", p}, {"d", d}, {"n", n}, {"i", i}}).graph);

  for (std::size_t a = 0; a < out.valid.size(); ++a) {
    for (std::size_t b = a + 1; b < out.valid.size(); ++b) {
      const long long i = out.valid[a], j = out.valid[b];
      const bool same = class_of[i] == class_of[j];
      const bool iso = are_isomorphic(graphs.at(i), graphs.at(j)).has_value();
      ClaimItem item{"iso_" + std::to_string(i) + "_" + std::to_string(j),
                     same ? "isomorphic" : "non-isomorphic",
                     iso ? "isomorphic" : "non-isomorphic", same == iso};
      out.all_pass = out.all_pass && item.pass;
      out.checks.push_back(std::move(item));
    }
  }
  return out;
}

}  // namespace symcay
