#include <catch2/catch_amalgamated.hpp>

#include <cstdint>

#include "symcay/gf.hpp"

using namespace symcay;

TEST_CASE("moduli are deterministic: lex-least irreducible polynomials") {
  CHECK(Field(2, 4).modulus() == std::vector<int>{1, 1, 0, 0, 1});  // x^4 + x + 1
  CHECK(Field(2, 4).modulus_string() == "x^4 + x + 1");
  CHECK(Field(3, 3).modulus() == std::vector<int>{1, 2, 0, 1});  // x^3 + 2x + 1
  CHECK(Field(3, 3).modulus_string() == "x^3 + 2*x + 1");
  CHECK(Field(5, 2).modulus() == std::vector<int>{2, 0, 1});  // x^2 + 2
  CHECK(Field(2, 10).modulus() == std::vector<int>{1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1});
}

TEST_CASE("prime fields match integer arithmetic mod p") {
  Field f(13, 1);
  REQUIRE(f.size() == 13);
  for (std::uint64_t a = 0; a < 13; ++a)
    for (std::uint64_t b = 0; b < 13; ++b) {
      auto ea = f.from_index(a), eb = f.from_index(b);
      CHECK((ea + eb).index() == (a + b) % 13);
      CHECK((ea * eb).index() == (a * b) % 13);
      CHECK((ea - eb).index() == (a + 13 - b) % 13);
    }
  for (std::uint64_t a = 1; a < 13; ++a) {
    auto ea = f.from_index(a);
    CHECK((ea * ea.inverse()).is_one());
  }
}

TEST_CASE("field laws hold in GF(16) and GF(27)") {
  for (Field f : {Field(2, 4), Field(3, 3)}) {
    const std::uint64_t q = f.size();
    auto omega = f.primitive_element();
    CHECK(omega.multiplicative_order() == q - 1);
    for (std::uint64_t i = 0; i < q; ++i) {
      auto a = f.from_index(i);
      CHECK(a.index() == i);
      CHECK(a.pow(q) == a);  // Frobenius fixed field
      CHECK((a + f.zero()) == a);
      CHECK((a * f.one()) == a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        std::uint64_t ord = a.multiplicative_order();
        CHECK((q - 1) % ord == 0);
        CHECK(a.pow(ord).is_one());
        for (std::uint64_t d = 1; d < ord; ++d)
          if (ord % d == 0) CHECK_FALSE(a.pow(d).is_one());
      }
      CHECK(a.frobenius(f.degree()) == a);
    }
    // Frobenius is a field automorphism.
    for (std::uint64_t i = 0; i < q; ++i)
      for (std::uint64_t j = 0; j < q; ++j) {
        auto a = f.from_index(i), b = f.from_index(j);
        CHECK((a + b).frobenius(1) == a.frobenius(1) + b.frobenius(1));
        CHECK((a * b).frobenius(1) == a.frobenius(1) * b.frobenius(1));
      }
  }
}

TEST_CASE("primitive divisors") {
  CHECK(is_primitive_divisor(5, 2, 4));
  CHECK(is_primitive_divisor(15, 2, 4));
  CHECK(is_primitive_divisor(7, 2, 3));
  CHECK(is_primitive_divisor(9, 2, 6));
  CHECK(is_primitive_divisor(13, 3, 3));
  CHECK_FALSE(is_primitive_divisor(3, 2, 4));   // 3 divides 2^2 - 1
  CHECK_FALSE(is_primitive_divisor(7, 2, 6));   // 7 divides 2^3 - 1
  CHECK_FALSE(is_primitive_divisor(6, 2, 4));   // 6 does not divide 15
}

TEST_CASE("irreducibility witnesses") {
  CHECK_FALSE(detail::poly_irreducible(2, {1, 0, 1}));  // (x+1)^2
  CHECK(detail::poly_irreducible(2, {1, 1, 1}));
  CHECK(detail::poly_irreducible(3, {1, 2, 0, 1}));
  CHECK_FALSE(detail::poly_irreducible(5, {0, 1, 1}));  // x(x+1)
}

TEST_CASE("field construction rejects bad hypotheses and oversize fields") {
  CHECK_THROWS_AS(Field(4, 2), hypothesis_error);
  CHECK_THROWS_AS(Field(2, 0), hypothesis_error);
  CHECK_THROWS_AS(Field(2, 25), bound_error);
  Field f(2, 4);
  CHECK_THROWS_AS(f.zero().inverse(), hypothesis_error);
  CHECK_THROWS_AS(f.zero().multiplicative_order(), hypothesis_error);
  CHECK_THROWS_AS(f.from_index(16), hypothesis_error);
  CHECK_THROWS_AS(f.element({1, 1}), hypothesis_error);
  CHECK(f.element({1, 1, 0, 0}).index() == 3);
  Field g(3, 3);
  CHECK_THROWS_AS(f.one() + g.one(), hypothesis_error);  // different fields
}
