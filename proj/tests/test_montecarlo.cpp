#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "coxext/errors.hpp"
#include "coxext/montecarlo.hpp"

using namespace coxext;

TEST_CASE("KS statistic constructions") {
  auto uniform = [](double x) { return std::clamp(x, 0.0, 1.0); };
  std::vector<double> quantiles;
  for (int i = 1; i <= 10; ++i) quantiles.push_back((i - 0.5) / 10);
  CHECK(ks_statistic(quantiles, uniform) == doctest::Approx(0.05));

  const std::vector<double> median{0.5};
  CHECK(ks_statistic(median, uniform) == doctest::Approx(0.5));

  CHECK_THROWS_AS(ks_statistic(std::vector<double>{}, uniform), DomainError);
}

TEST_CASE("KS statistic on a step law with ties") {
  // F jumps from 0.2 to 0.7 at v = 3.
  auto cdf = [](double x) { return x < 3 ? 0.2 : 0.7; };
  auto left = [](double x) { return x <= 3 ? 0.2 : 0.7; };
  const std::vector<double> all_equal(20, 3.0);
  CHECK(ks_statistic(all_equal, cdf, left) == doctest::Approx(std::max(0.2, 1 - 0.7)));
}

TEST_CASE("rows of size one") {
  SimConfig c;
  c.spec = parse_sequence_spec("A:n");
  c.stat = Statistic::des;
  c.replicates = 50;
  c.seed = 5;
  const auto row = simulate_row(c, 1);
  REQUIRE(row.normalized.size() == 50);
  for (std::size_t r = 0; r < row.maxima.size(); ++r) {
    CHECK((row.maxima[r] == 0 || row.maxima[r] == 1));
    CHECK(std::abs(row.normalized[r]) == doctest::Approx(1.0));
  }
}

TEST_CASE("determinism across thread counts") {
  SimConfig c;
  c.spec = parse_sequence_spec("B:n");
  c.stat = Statistic::inv;
  c.rows = {20, 50};
  c.replicates = 300;
  c.seed = 123;
  c.threads = 1;
  const auto one = simulate(c);
  c.threads = 7;
  const auto seven = simulate(c);
  c.method = SamplerMethod::decomposition;
  const auto decomposition = simulate(c);
  for (std::size_t r = 0; r < one.rows.size(); ++r) {
    CHECK(one.rows[r].normalized == seven.rows[r].normalized);
    CHECK(one.rows[r].ks_exact == seven.rows[r].ks_exact);
    CHECK(decomposition.rows[r].normalized != one.rows[r].normalized);
  }
}

TEST_CASE("simulated maxima follow the exact law") {
  SimConfig c;
  c.spec = parse_sequence_spec("A:n");
  c.stat = Statistic::des;
  c.replicates = 4000;
  c.seed = 2024;
  for (auto method : {SamplerMethod::inverse_cdf, SamplerMethod::decomposition}) {
    c.method = method;
    const auto row = simulate_row(c, 100);
    REQUIRE(row.ks_exact);
    CHECK(*row.ks_exact < 1.628 / std::sqrt(4000.0));
    CHECK(row.method == method);
  }
}

TEST_CASE("configuration errors") {
  SimConfig c;
  c.spec = parse_sequence_spec("A:n");
  CHECK_THROWS_AS(simulate(c), DomainError);
  c.rows = {10};
  c.replicates = 0;
  CHECK_THROWS_AS(simulate(c), DomainError);
}
