#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <random>

#include "symcay/graph_builders.hpp"
#include "symcay/notation.hpp"
#include "symcay/transitivity.hpp"

using namespace symcay;

namespace {

std::uint64_t brute_aut_order(const Graph& g) {
  std::vector<int> img(static_cast<std::size_t>(g.n()));
  std::iota(img.begin(), img.end(), 0);
  std::uint64_t count = 0;
  do {
    if (g.permutation_preserves_adjacency(Permutation(img))) ++count;
  } while (std::next_permutation(img.begin(), img.end()));
  return count;
}

Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph k_mn(int m, int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) es.emplace_back(i, m + j);
  return Graph(m + n, std::move(es));
}

}  // namespace

TEST_CASE("automorphism group order equals brute force on every corpus graph up to 8 vertices") {
  std::vector<Graph> corpus{
      named_graph("K4"),
      named_graph("K5"),
      named_graph("C4"),
      named_graph("C5"),
      named_graph("C6"),
      named_graph("C7"),
      named_graph("C8"),
      named_graph("Q3"),
      named_graph("lexC3"),
      named_graph("lexC4"),
      named_graph("crown4"),
      prism(),
      k_mn(2, 3),
      k_mn(3, 3),
      k_mn(1, 4),
      Graph(4, {{0, 1}, {1, 2}, {2, 3}}),  // path
      Graph(3, {{0, 1}}),                  // edge plus isolated vertex
      Graph(4, {}),                        // empty graph
      disjoint_union(named_graph("C3"), named_graph("C3")),
      disjoint_union(named_graph("C3"), named_graph("C4")),
      double_cover(named_graph("K4")),
  };
  for (const auto& g : corpus) {
    REQUIRE(g.n() <= 8);
    CHECK(automorphism_group(g).order() == brute_aut_order(g));
  }
}

TEST_CASE("classic automorphism group orders") {
  CHECK(automorphism_group(named_graph("K5")).order() == 120);
  CHECK(automorphism_group(named_graph("petersen")).order() == 120);
  CHECK(automorphism_group(named_graph("Q3")).order() == 48);
  CHECK(automorphism_group(named_graph("crown5")).order() == 240);
  CHECK(automorphism_group(named_graph("C9")).order() == 18);
  CHECK(automorphism_group(named_graph("fano_nonincidence")).order() == 336);
  CHECK(automorphism_group(named_graph("pg23_incidence")).order() == 11232);
}

TEST_CASE("doubled 5-cycle: order 320 and arc-transitive") {
  Graph lex = named_graph("lexC5");
  PermGroup aut = automorphism_group(lex);
  CHECK(aut.order() == 320);
  auto rep = classify(lex);
  CHECK(rep.vertex_transitive);
  CHECK(rep.edge_transitive);
  CHECK(rep.arc_transitive);
  CHECK(to_string(rep.classification) == "arc-transitive");
}

TEST_CASE("isomorphism search returns a checkable mapping") {
  Graph pet = named_graph("petersen");
  std::mt19937 rng(42u);
  std::vector<int> img(10);
  std::iota(img.begin(), img.end(), 0);
  std::shuffle(img.begin(), img.end(), rng);
  Graph shuffled = pet.relabeled(Permutation(img));
  auto map = are_isomorphic(pet, shuffled);
  REQUIRE(map.has_value());
  for (auto [u, v] : pet.edges())
    CHECK(shuffled.has_edge((*map)[static_cast<std::size_t>(u)],
                            (*map)[static_cast<std::size_t>(v)]));

  CHECK_FALSE(are_isomorphic(named_graph("C6"),
                             disjoint_union(named_graph("C3"), named_graph("C3")))
                  .has_value());
  CHECK_FALSE(are_isomorphic(k_mn(3, 3), prism()).has_value());
  CHECK_FALSE(are_isomorphic(named_graph("K4"), named_graph("C4")).has_value());
  CHECK(are_isomorphic(double_cover(named_graph("K4")), named_graph("Q3")).has_value());

  // Disconnected against disconnected, equal multisets of components.
  Graph a = disjoint_union(named_graph("C3"), named_graph("C4"));
  Graph b = disjoint_union(named_graph("C4"), named_graph("C3"));
  CHECK(are_isomorphic(a, b).has_value());
}

TEST_CASE("transitivity report distinguishes the classification levels") {
  Graph k5 = named_graph("K5");
  auto full = transitivity(k5, automorphism_group(k5));
  CHECK(full.vertex_transitive);
  CHECK(full.edge_transitive);
  CHECK(full.arc_transitive);
  CHECK(full.max_s == 2);
  CHECK(full.stabilizer_order == 24);
  CHECK(stabilizer_consistency(k5, automorphism_group(k5)));

  // Rotation only: the cycle is vertex- and edge- but not arc-transitive.
  Graph c6 = named_graph("C6");
  PermGroup rot(6, {parse_permutation("(1 2 3 4 5 6)")});
  auto half = transitivity(c6, rot);
  CHECK(half.vertex_transitive);
  CHECK(half.edge_transitive);
  CHECK_FALSE(half.arc_transitive);
  CHECK(to_string(half.classification) == "half-transitive");

  Graph p3(3, {{0, 1}, {1, 2}});
  auto eo = transitivity(p3, automorphism_group(p3));
  CHECK_FALSE(eo.vertex_transitive);
  CHECK(eo.edge_transitive);
  CHECK(to_string(eo.classification) == "edge-only");

  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto none = transitivity(p4, automorphism_group(p4));
  CHECK_FALSE(none.vertex_transitive);
  CHECK_FALSE(none.edge_transitive);
  CHECK(to_string(none.classification) == "none");

  CHECK_THROWS_AS(stabilizer_consistency(named_graph("C5"), automorphism_group(named_graph("C5"))),
                  hypothesis_error);  // not 4-valent
  Graph lex = named_graph("lexC5");
  CHECK_THROWS_AS(stabilizer_consistency(lex, automorphism_group(lex)),
                  hypothesis_error);  // 1- but not 2-arc-transitive
}

TEST_CASE("group automorphisms preserving a connection set") {
  Permutation r7 = parse_permutation("(1 2 3 4 5 6 7)");
  PermGroup z7(7, {r7});
  std::vector<Permutation> s{r7, r7.inverse(), r7.power(2), r7.power(-2)};
  CHECK(aut_G_S(z7, s).order() == 2);  // only inversion fixes {1,2,5,6}

  PermGroup klein(4, {parse_permutation("(1 2)(3 4)"), parse_permutation("(1 3)(2 4)")});
  std::vector<Permutation> invs{parse_permutation("(1 2)(3 4)"), parse_permutation("(1 3)(2 4)"),
                                parse_permutation("(1 4)(2 3)")};
  CHECK(aut_G_S(klein, invs).order() == 6);  // GL(2,2) permutes the involutions

  CHECK_THROWS_AS(aut_G_S(z7, s, 3), bound_error);
  CHECK_THROWS_AS(aut_G_S(z7, {}), hypothesis_error);
  CHECK_THROWS_AS(aut_G_S(z7, {Permutation::identity(7)}), hypothesis_error);
  CHECK_THROWS_AS(aut_G_S(klein, {parse_permutation("(1 2)(3 4)")}), hypothesis_error);
}

TEST_CASE("normal Cayley detection") {
  Permutation r6 = parse_permutation("(1 2 3 4 5 6)");
  PermGroup z6(6, {r6});
  CHECK(is_normal_cayley(cayley(z6, {r6, r6.inverse()})));  // Z6 normal in D6

  Permutation r4 = parse_permutation("(1 2 3 4)");
  PermGroup z4(4, {r4});
  CHECK_FALSE(is_normal_cayley(cayley(z4, {r4, r4.power(2), r4.power(3)})));  // Z4 in S4
}
