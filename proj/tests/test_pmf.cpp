#include <doctest.h>

#include <cmath>

#include "coxext/errors.hpp"
#include "coxext/pmf.hpp"

using namespace coxext;

TEST_CASE("convolve_uniform basics") {
  const std::vector<double> delta{1.0};
  auto two = convolve_uniform(delta, 2);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == 0.5);
  CHECK(two[1] == 0.5);

  CHECK(convolve_uniform(delta, 1) == delta);

  const auto four = convolve_uniform(two, 3);
  REQUIRE(four.size() == 4);
  CHECK(four[0] == doctest::Approx(1.0 / 6));
  CHECK(four[1] == doctest::Approx(2.0 / 6));
  CHECK(four[2] == doctest::Approx(2.0 / 6));
  CHECK(four[3] == doctest::Approx(1.0 / 6));

  CHECK_THROWS_AS(convolve_uniform(delta, 0), DomainError);
}

TEST_CASE("convolve_uniform agrees with plain convolution") {
  std::vector<double> a{0.1, 0.2, 0.3, 0.4};
  const auto fast = convolve_uniform(a, 5);
  const auto slow = convolve(a, std::vector<double>(5, 0.2));
  REQUIRE(fast.size() == slow.size());
  for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-14));
}

TEST_CASE("mass is preserved over long chains") {
  std::vector<double> mass{1.0};
  UniformConvolver conv;
  for (std::uint64_t d = 2; d <= 10'001; ++d) {
    conv.apply(mass, 2 + d % 7);
    if (d == 2) CHECK(std::abs(total_mass(mass) - 1.0) < 1e-12);
  }
  CHECK(std::abs(total_mass(mass) - 1.0) < 1e-9);
}

TEST_CASE("normalize_counts") {
  const std::vector<mpz_class> counts{1, 4, 1};
  const auto m = normalize_counts(counts);
  CHECK(m[0] == doctest::Approx(1.0 / 6));
  CHECK(m[1] == doctest::Approx(4.0 / 6));
  CHECK_THROWS_AS(normalize_counts(std::vector<mpz_class>{0, 0}), DomainError);
}

TEST_CASE("cdf table tails and quantiles") {
  const std::vector<double> mass{0.25, 0.5, 0.25};
  const CdfTable t(mass);
  CHECK(t.cdf(-1) == 0.0);
  CHECK(t.cdf(0) == 0.25);
  CHECK(t.cdf(1) == 0.75);
  CHECK(t.cdf(2) == 1.0);
  CHECK(t.upper_tail(0) == 0.75);
  CHECK(t.upper_tail(1) == 0.25);
  CHECK(t.upper_tail(2) == 0.0);
  CHECK(t.quantile_from_tail(1.0) == 0);
  CHECK(t.quantile_from_tail(0.76) == 0);
  CHECK(t.quantile_from_tail(0.5) == 1);
  CHECK(t.quantile_from_tail(0.2) == 2);
  CHECK(t.quantile_from_tail(1e-300) == 2);
}

TEST_CASE("far upper tail keeps relative accuracy") {
  std::vector<double> mass(100, 0.0);
  mass[0] = 1.0 - 1e-200;
  mass[99] = 1e-200;
  const CdfTable t(mass);
  CHECK(t.upper_tail(98) == doctest::Approx(1e-200));
}

TEST_CASE("statistic names") {
  CHECK(parse_statistic("inv") == Statistic::inv);
  CHECK(to_string(Statistic::des) == "des");
  CHECK_THROWS_AS(parse_statistic("bogus"), DomainError);
}
