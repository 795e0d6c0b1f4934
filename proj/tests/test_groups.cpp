#include <doctest.h>

#include <cmath>

#include "coxext/errors.hpp"
#include "coxext/groups.hpp"

using namespace coxext;

TEST_CASE("parse single factors") {
  const auto g = parse_descriptor("A3");
  REQUIRE(g.factors().size() == 1);
  CHECK(g.factors()[0].kind == FactorKind::A);
  CHECK(g.rank() == 3);
  CHECK(parse_descriptor("I2(7)").rank() == 2);
  CHECK(parse_descriptor(" D 4 ").rank() == 4);
}

TEST_CASE("parse products and powers") {
  const auto g = parse_descriptor("B2 x I2(5)^2");
  REQUIRE(g.factors().size() == 3);
  CHECK(g.factors()[0] == IrreducibleFactor{FactorKind::B, 2});
  CHECK(g.factors()[1] == IrreducibleFactor{FactorKind::I2, 5});
  CHECK(g.factors()[2] == IrreducibleFactor{FactorKind::I2, 5});
  CHECK(g.rank() == 6);
  CHECK(parse_descriptor("A1*A1*A1") == parse_descriptor("A1^3"));
  CHECK(parse_descriptor(g.to_string()) == g);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_descriptor("A0"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("I2(2)"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("B1"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("A3^0"), DomainError);
  CHECK_THROWS_AS(parse_descriptor("A99999999999999999999999"), DomainError);
  CHECK_THROWS_AS(parse_descriptor(""), ParseError);
  try {
    parse_descriptor("A2 x Q3");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
}

TEST_CASE("degree lists") {
  using V = std::vector<std::uint64_t>;
  CHECK(degrees(parse_descriptor("I2(7)")).degrees == V{2, 7});
  CHECK(degrees(parse_descriptor("A3")).degrees == V{2, 3, 4});
  CHECK(degrees(parse_descriptor("B3")).degrees == V{2, 4, 6});
  CHECK(degrees(parse_descriptor("D4")).degrees == V{2, 4, 4, 6});
  CHECK(degrees(parse_descriptor("B2 x A1")).degrees == V{2, 2, 4});
}

TEST_CASE("group summaries") {
  auto s = group_summary(parse_descriptor("A3"));
  CHECK(s.rank == 3);
  CHECK(s.reflection_count == 6);
  CHECK(s.order == 24);
  CHECK(s.log_order == doctest::Approx(std::log(24.0)));

  s = group_summary(parse_descriptor("I2(5)"));
  CHECK(s.rank == 2);
  CHECK(s.reflection_count == 5);
  CHECK(s.order == 10);

  s = group_summary(parse_descriptor("B2 x A1"));
  CHECK(s.rank == 3);
  CHECK(s.reflection_count == 5);
  CHECK(s.order == 16);
  CHECK(s.log_order == doctest::Approx(std::log(16.0)));
}

TEST_CASE("reflection count is the sum of d - 1 and order the product of degrees") {
  for (const char* text : {"A10", "B7", "D9", "I2(12) x A4", "D2 x D3"}) {
    const auto g = parse_descriptor(text);
    const auto degs = degrees(g).degrees;
    std::uint64_t refl = 0;
    mpz_class prod = 1;
    for (auto d : degs) {
      refl += d - 1;
      prod *= static_cast<unsigned long>(d);
    }
    CHECK(degs.size() == g.rank());
    CHECK(refl == g.reflection_count());
    CHECK(prod == group_summary(g).order);
  }
}

TEST_CASE("large rank order") {
  const auto s = group_summary(parse_descriptor("A9999"));
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), 10000);
  CHECK(s.order == fact);
}
