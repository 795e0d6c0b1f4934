#include <doctest.h>

#include <cmath>

#include "coxext/errors.hpp"
#include "coxext/extremes.hpp"

using namespace coxext;

TEST_CASE("normal cdf values") {
  CHECK(std_normal_cdf(0.0) == 0.5);
  // Reference values from 50-digit evaluation.
  CHECK(std::abs(std_normal_cdf(1.96) - 0.97500210485177956) < 1e-15);
  CHECK(std_normal_upper_tail(5.0) == doctest::Approx(2.8665157187919391e-7).epsilon(1e-13));
  CHECK(std_normal_upper_tail(8.0) == doctest::Approx(6.2209605742717841e-16).epsilon(1e-12));
  CHECK(std_normal_cdf(-8.0) == doctest::Approx(6.2209605742717841e-16).epsilon(1e-12));
}

TEST_CASE("gumbel cdf") {
  CHECK(gumbel_cdf(0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(gumbel_cdf(40.0) == 1.0);
  CHECK(gumbel_cdf(-10.0) < 1e-300);
  double prev = 0;
  for (double x = -5; x <= 10; x += 0.5) {
    CHECK(gumbel_cdf(x) >= prev);
    prev = gumbel_cdf(x);
  }
}

TEST_CASE("norming constants") {
  const auto g = norming_constants(100, 0.0, 1.0);
  CHECK(g.alpha == doctest::Approx(3.0348542587702927).epsilon(1e-14));
  CHECK(g.beta == doctest::Approx(2.3662547929063940).epsilon(1e-14));
  CHECK(g.b == g.beta);
  CHECK(g.a == doctest::Approx(1.0 / g.alpha));

  const auto h = norming_constants(100, 10.0, 2.0);
  CHECK(h.a_literal == doctest::Approx(6.0697085175405854).epsilon(1e-14));
  CHECK(h.a == doctest::Approx(2.0 / 3.0348542587702927).epsilon(1e-14));
  CHECK(h.b == doctest::Approx(14.732509585812788).epsilon(1e-14));

  CHECK_THROWS_AS(norming_constants(1, 0.0, 1.0), DomainError);
  CHECK_THROWS_AS(norming_constants(10, 0.0, 0.0), DomainError);
}

TEST_CASE("exact maximum cdf") {
  const Pmf a2 = eulerian_pmf(parse_descriptor("A2"));
  CHECK(exact_max_cdf(a2, 2, 0.0) == doctest::Approx(1.0 / 36));
  CHECK(exact_max_cdf(a2, 1, 1.7) == doctest::Approx(5.0 / 6));
  CHECK(exact_max_cdf(a2, 3, -0.1) == 0.0);
  CHECK(exact_max_cdf(a2, 3, 2.0) == 1.0);

  Pmf delta;
  delta.mass = {1.0};
  CHECK(exact_max_cdf(delta, 1000, 0.0) == 1.0);
}

TEST_CASE("exact maximum cdf is a power of the single-draw cdf") {
  const Pmf p = mahonian_pmf(parse_descriptor("A6"), false);
  for (double t : {3.0, 7.5, 10.0, 14.2}) {
    const double f1 = exact_max_cdf(p, 1, t);
    for (std::uint64_t n : {2, 7, 50}) {
      CHECK(exact_max_cdf(p, n, t) == doctest::Approx(std::pow(f1, static_cast<double>(n))).epsilon(1e-12));
      CHECK(exact_max_cdf(p, n + 1, t) <= exact_max_cdf(p, n, t));
    }
  }
}

TEST_CASE("sup error on a degenerate grid above the support") {
  const Pmf p = eulerian_pmf(parse_descriptor("A3"));
  const GumbelNorm norm = norming_constants(10, moments(parse_descriptor("A3"), Statistic::des));
  const Grid grid{50.0, 50.0, 1.0};
  const auto err = gumbel_sup_error(CdfTable(p.mass), norm, grid);
  CHECK(err.sup_error == doctest::Approx(1.0 - gumbel_cdf(50.0)));
  CHECK(err.argmax_x == 50.0);
}

TEST_CASE("sup error decreases along A_n descents") {
  const auto spec = parse_sequence_spec("A:n");
  const std::uint64_t ns[] = {100, 1000};
  const auto rep = gumbel_convergence(spec, Statistic::des, ns);
  REQUIRE(rep.rows.size() == 2);
  CHECK(rep.rows[1].sup_error < rep.rows[0].sup_error);
  for (const auto& r : rep.rows) CHECK((r.sup_error >= 0 && r.sup_error <= 1));
}

TEST_CASE("tail ratio") {
  const auto g = parse_descriptor("A100");
  const Pmf p = mahonian_pmf(g, false);
  const auto m = moments(g, Statistic::inv);
  const double xs[] = {-100.0, 1.0, 2.0, 10.0};
  const auto rows = tail_ratio(p, m, xs);
  CHECK(rows[0].tail == 1.0);
  CHECK(*rows[0].ratio == doctest::Approx(1.0 / std_normal_upper_tail(-100.0)));
  CHECK(*rows[1].ratio == doctest::Approx(1.0).epsilon(0.05));
  CHECK(*rows[2].ratio == doctest::Approx(1.0).epsilon(0.1));
  CHECK(rows[3].beyond_moderate_zone);
  CHECK_FALSE(rows[1].beyond_moderate_zone);
}

TEST_CASE("grid size") {
  CHECK(Grid{}.size() == 901);
  CHECK(Grid{-2, 5, 0.01}.size() == 701);
  CHECK_THROWS_AS((Grid{1, 0, 0.1}.size()), DomainError);
}

TEST_CASE("tail ratio at x=1 for A_n inversions against an mpmath oracle") {
  // Oracle: tests/oracles/tail_ratio.py (exact counts, mpmath erfc).
  const double x1[] = {1.0};
  struct Case {
    const char* g;
    double literal, smoothed;
  };
  for (const Case c : {Case{"A100", 1.0018637838371576, 1.0027271620761860},
                       Case{"A200", 1.0020040552772977, 1.0013681184952110},
                       Case{"A500", 1.0007678844402327, 1.0005482910636371}}) {
    const auto g = parse_descriptor(c.g);
    const auto row = tail_ratio(mahonian_pmf(g, false), moments(g, Statistic::inv), x1)[0];
    CHECK(*row.ratio == doctest::Approx(c.literal).epsilon(1e-9));
    CHECK(*row.smoothed_ratio == doctest::Approx(c.smoothed).epsilon(1e-9));
  }
}
