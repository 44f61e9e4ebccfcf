#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "symcay/notation.hpp"
#include "symcay/perm_group.hpp"

using namespace symcay;

TEST_CASE("cycle notation parses 1-based and prints back") {
  Permutation p = parse_permutation("(1 2 3)(4 5)");
  REQUIRE(p.degree() == 5);
  REQUIRE(p.order() == 6);
  CHECK(p[0] == 1);
  CHECK(p[1] == 2);
  CHECK(p[2] == 0);
  CHECK(p[3] == 4);
  CHECK(p[4] == 3);
  CHECK(parse_permutation("(1,2,3)(4,5)") == p);
  CHECK(print_permutation(p) == "(1 2 3)(4 5)");

  Permutation id = parse_permutation("()");
  CHECK(id.is_identity());
  CHECK(id.degree() == 0);
  CHECK(print_permutation(id) == "()");

  // min_degree pads with fixed points.
  CHECK(parse_permutation("(1 2)", 6).degree() == 6);

  // Non-disjoint cycles compose left to right: (1 2)(2 3) sends 1 -> 2 -> 3.
  Permutation q = parse_permutation("(1 2)(2 3)");
  CHECK(q[0] == 2);
  CHECK(q[1] == 0);
  CHECK(q[2] == 1);

  for (const char* text : {"(1 5 2)(3 4)", "(2 4)", "(1 10)(2 9)(3 8)"}) {
    Permutation r = parse_permutation(text);
    CHECK(parse_permutation(print_permutation(r)) == r);
  }
}

TEST_CASE("cycle notation rejects malformed text with a position") {
  CHECK_THROWS_AS(parse_permutation("(1 2 (3"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 1)"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(0)"), parse_error);
  CHECK_THROWS_AS(parse_permutation(""), parse_error);
  CHECK_THROWS_AS(parse_permutation("1 2"), parse_error);
  CHECK_THROWS_AS(parse_permutation("(1 2"), parse_error);
  try {
    parse_permutation("(1 2 (3");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("products apply the left factor first") {
  Permutation p = parse_permutation("(1 2)", 3);
  Permutation q = parse_permutation("(2 3)");
  Permutation pq = p * q;
  for (int i = 0; i < 3; ++i) CHECK(pq[i] == q[p[i]]);
  CHECK(pq == parse_permutation("(1 3 2)"));

  Permutation g = parse_permutation("(1 2 3)");
  CHECK(p.extended(3).conjugated_by(g) == g.inverse() * p.extended(3) * g);
  CHECK((p * p.inverse()).is_identity());
  CHECK(g.power(3).is_identity());
  CHECK(g.power(-1) == g.inverse());
  CHECK(g.power(2) == g * g);
  CHECK(parse_permutation("(1 2 3 4)(5 6)").order() == 4);
  CHECK(parse_permutation("(1 2 3)(4 5)").first_moved() == 0);
  CHECK(Permutation::identity(4).first_moved() == -1);
}

TEST_CASE("image arrays must be bijections") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), hypothesis_error);
  CHECK_THROWS_AS(Permutation({0, 2}), hypothesis_error);
  CHECK_THROWS_AS(Permutation({-1, 0}), hypothesis_error);
  CHECK_THROWS_AS(parse_permutation("(1 2)") * parse_permutation("(1 2 3)"),
                  hypothesis_error);  // degree mismatch
  CHECK_THROWS_AS(parse_permutation("(1 2)").extended(1), hypothesis_error);
}

TEST_CASE("stabilizer chains support order, membership and stabilizers") {
  PermGroup s4(4, {parse_permutation("(1 2 3 4)"), parse_permutation("(1 2)", 4)});
  REQUIRE(s4.order() == 24);
  auto els = s4.elements();
  REQUIRE(els.size() == 24);
  CHECK(std::set<Permutation>(els.begin(), els.end()).size() == 24);
  for (const auto& e : els) CHECK(s4.contains(e));
  CHECK(s4.point_stabilizer(0).order() == 6);

  PermGroup a4(4, {parse_permutation("(1 2 3)", 4), parse_permutation("(2 3 4)")});
  CHECK(a4.order() == 12);
  CHECK(a4.is_subgroup_of(s4));
  CHECK_FALSE(s4.is_subgroup_of(a4));
  CHECK(is_normal_in(a4, s4));
  PermGroup t(4, {parse_permutation("(1 2)", 4)});
  CHECK_FALSE(is_normal_in(t, s4));
  CHECK(core(s4, t).order() == 1);
  CHECK(core(s4, a4).order() == 12);

  CHECK(s4.orbit(0).size() == 4);
  auto w = s4.orbit_witness(0, 3);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == 3);
  CHECK(s4.contains(*w));
}

TEST_CASE("chain order equals brute-force closure on random groups") {
  // Fifty deterministic random subgroups of S_4..S_9, each of order <= 10^4,
  // closed by breadth-first multiplication and compared exactly.
  std::mt19937 rng(20260814u);
  int collected = 0;
  while (collected < 50) {
    int deg = 4 + static_cast<int>(rng() % 6);
    int ngens = 1 + static_cast<int>(rng() % 3);
    std::vector<Permutation> gens;
    for (int k = 0; k < ngens; ++k) {
      std::vector<int> img(static_cast<std::size_t>(deg));
      std::iota(img.begin(), img.end(), 0);
      std::shuffle(img.begin(), img.end(), rng);
      gens.emplace_back(std::move(img));
    }
    std::set<Permutation> closure{Permutation::identity(deg)};
    std::vector<Permutation> frontier(closure.begin(), closure.end());
    bool too_big = false;
    while (!frontier.empty() && !too_big) {
      std::vector<Permutation> next;
      for (const auto& a : frontier)
        for (const auto& g : gens) {
          Permutation b = a * g;
          if (closure.insert(b).second) {
            next.push_back(std::move(b));
            if (closure.size() > 10000) {
              too_big = true;
              break;
            }
          }
        }
      frontier = std::move(next);
    }
    if (too_big) continue;
    PermGroup grp(deg, gens);
    REQUIRE(grp.order() == closure.size());
    for (const auto& e : closure) CHECK(grp.contains(e));
    ++collected;
  }
  REQUIRE(collected == 50);
}

TEST_CASE("orbits partition the domain") {
  PermGroup g(6, {parse_permutation("(1 2 3)", 6), parse_permutation("(4 5)", 6)});
  auto orbs = g.orbits();
  REQUIRE(orbs.size() == 3);
  CHECK(orbs[0] == std::vector<int>{0, 1, 2});
  CHECK(orbs[1] == std::vector<int>{3, 4});
  CHECK(orbs[2] == std::vector<int>{5});
  CHECK(g.order() == 6);
}
