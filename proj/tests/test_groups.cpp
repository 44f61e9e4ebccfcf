#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "symcay/group_builders.hpp"

using namespace symcay;

TEST_CASE("frobenius groups: orders, transitivity, stabilizer") {
  auto fb = frobenius_group(3, 2, 8);
  CHECK(fb.G.order() == 72);
  CHECK(fb.W.order() == 9);
  CHECK(fb.H.order() == 8);
  CHECK(fb.h.order() == 8);
  CHECK(fb.G.orbit(0).size() == 9);
  CHECK(fb.G.point_stabilizer(0).order() == 8);
  CHECK(is_normal_in(fb.W, fb.G));

  auto f20 = frobenius_group(5, 1, 4);
  CHECK(f20.G.order() == 20);
  CHECK(f20.G.degree() == 5);

  CHECK_THROWS_AS(frobenius_group(5, 1, 3), hypothesis_error);  // 3 does not divide 4
  CHECK_THROWS_AS(frobenius_group(4, 1, 2), hypothesis_error);  // 4 not prime
  CHECK_THROWS_AS(frobenius_group(5, 1, 1), hypothesis_error);  // n >= 2
}

TEST_CASE("frobenius groups act fixed-point-freely: brute force over all desk instances") {
  // Every instance with p^d <= 343 and |G| <= 10^4: each non-identity element
  // fixes at most one of the p^d points, and the point stabilizer is exactly H.
  int instances = 0;
  for (long long p : {2, 3, 5, 7, 11, 13, 17, 19, 23}) {
    for (int d = 1; d <= 8; ++d) {
      long long q = 1;
      for (int i = 0; i < d; ++i) q *= p;
      if (q > 343) break;
      for (long long n = 2; n < q; ++n) {
        if ((q - 1) % n != 0) continue;
        if (q * n > 10000) continue;
        auto fb = frobenius_group(p, d, n);
        REQUIRE(fb.G.order() == static_cast<std::uint64_t>(q * n));
        for (const auto& g : fb.G.elements()) {
          if (g.is_identity()) continue;
          int fixed = 0;
          for (int i = 0; i < g.degree(); ++i) fixed += g[i] == i;
          REQUIRE(fixed <= 1);
        }
        CHECK(fb.G.point_stabilizer(0).order() == static_cast<std::uint64_t>(n));
        ++instances;
      }
    }
  }
  CHECK(instances >= 40);
}

TEST_CASE("dihedral and projective groups have the textbook orders") {
  CHECK(dihedral(5).order() == 10);
  CHECK(dihedral(12).order() == 24);
  CHECK_THROWS_AS(dihedral(2), hypothesis_error);
  CHECK(pgl2(5).order() == 120);
  CHECK(psl2(5).order() == 60);
  CHECK(pgl2(7).order() == 336);
  CHECK(psl2(7).order() == 168);
  CHECK(pgl2(7).orbit(0).size() == 8);  // transitive on the projective line
  CHECK(psl2(7).is_subgroup_of(pgl2(7)));
}

TEST_CASE("block constructions: element orders and group sizes") {
  auto im = construction_group_im(7, 1, 3, 3);
  CHECK(im.h.order() == 18);  // 2md
  CHECK(im.W.order() == 343);
  CHECK(im.N.order() == 8);
  CHECK(im.G.order() == 6174);
  CHECK(im.X.order() == 49392);
  CHECK(im.X.degree() == 42);
  CHECK(im.N.is_subgroup_of(im.X));
  CHECK_FALSE(is_normal_in(im.G, im.X));

  auto yin = construction_group_yin(13, 2, 3, 3);
  CHECK(yin.h.order() == 36);  // 4md
  CHECK(yin.y.order() == 36);
  CHECK(yin.W.order() == 2197);
  CHECK(yin.N.order() == 4);
  CHECK(yin.G.order() == 79092);
  CHECK(yin.X.order() == 316368);

  // Parameter hypotheses: exponents (p-1)/(2m) resp. (p-1)/(4m) must be integers.
  CHECK_THROWS_AS(construction_group_im(5, 1, 3, 3), hypothesis_error);
  CHECK_THROWS_AS(construction_group_yin(7, 1, 3, 3), hypothesis_error);
  CHECK_THROWS_AS(construction_group_im(9, 1, 3, 3), hypothesis_error);  // p not prime
}

TEST_CASE("dihedral-flavoured coset construction has the computed chain of subgroups") {
  auto c = construction_group_d2p(4, 15);
  CHECK(c.h.order() == 15);
  CHECK(c.X.order() == 960);
  CHECK(c.V.order() == 64);
  CHECK(c.W.order() == 16);
  CHECK(c.G.order() == 240);
  CHECK(c.R.order() == 4);
  CHECK(c.X.order() / c.R.order() == 240);
  CHECK(c.G.is_subgroup_of(c.X));
  CHECK(c.X.contains(c.h));

  CHECK_THROWS_AS(construction_group_d2p(3, 7), hypothesis_error);   // d must be even
  CHECK_THROWS_AS(construction_group_d2p(4, 5), hypothesis_error);   // 3 must divide n
  CHECK_THROWS_AS(construction_group_d2p(4, 9), hypothesis_error);   // not a primitive divisor
  CHECK_THROWS_AS(construction_group_d2p(2, 4), hypothesis_error);   // n odd
}

TEST_CASE("permutation-module constructions over the alternating and symmetric groups") {
  auto a5 = a5_module_group(3);
  CHECK(a5.W.order() == 81);  // deleted permutation module of Z_3^5
  CHECK(a5.X.order() == 4860);
  CHECK(a5.G.order() == 405);
  CHECK(a5.R.order() == 12);
  CHECK(a5.T.order() == 60);
  CHECK(a5.edge.order() == 2);
  CHECK(a5.G.is_subgroup_of(a5.X));
  CHECK(is_normal_in(a5.W, a5.X));
  CHECK_FALSE(is_normal_in(a5.G, a5.X));

  auto s5 = s5_module_group(3);
  CHECK(s5.W.order() == 81);
  CHECK(s5.X.order() == 19440);
  CHECK(s5.G.order() == 810);
  CHECK(s5.R.order() == 24);
  CHECK(s5.edge.order() == 2);

  CHECK_THROWS_AS(a5_module_group(4), hypothesis_error);  // p must be an odd prime
  CHECK_THROWS_AS(a5_module_group(5), hypothesis_error);  // p must not divide |A5|
}

TEST_CASE("affine semilinear construction over GF(2^(p-1))") {
  auto sl = affine_semilinear_group(5);
  CHECK(sl.field.size() == 16);
  CHECK(sl.X.order() == 160);
  CHECK(sl.G.order() == 80);
  CHECK(sl.W.order() == 16);
  CHECK(sl.H.order() == 2);
  CHECK(sl.h.order() == 5);
  CHECK(sl.sigma.order() == 2);
  CHECK(sl.h.conjugated_by(sl.sigma) == sl.h.inverse());
  CHECK(sl.G.is_subgroup_of(sl.X));
  CHECK(is_normal_in(sl.G, sl.X));
  // W is elementary abelian: generators are commuting involutions.
  for (const auto& a : sl.W.generators()) {
    CHECK(a.order() == 2);
    for (const auto& b : sl.W.generators()) CHECK(a * b == b * a);
  }

  CHECK_THROWS_AS(affine_semilinear_group(7), hypothesis_error);  // 2 has order 3 mod 7
  CHECK_THROWS_AS(affine_semilinear_group(6), hypothesis_error);  // not prime
  CHECK_THROWS_AS(affine_semilinear_group(19), bound_error);      // 2^18 points
}

TEST_CASE("perm_from_fn builds the image table") {
  Permutation rot = perm_from_fn(5, [](int i) { return (i + 2) % 5; });
  CHECK(rot.order() == 5);
  CHECK(rot[0] == 2);
  CHECK_THROWS_AS(perm_from_fn(3, [](int) { return 0; }), hypothesis_error);
}
