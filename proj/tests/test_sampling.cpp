#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "coxext/montecarlo.hpp"
#include "coxext/sampling.hpp"

using namespace coxext;

TEST_CASE("Philox known-answer vector") {
  // Random123 reference: counter 0, key 0.
  const auto out = philox4x32({0, 0, 0, 0}, {0, 0});
  CHECK(out[0] == 0x6627e8d5u);
  CHECK(out[1] == 0xe169c58du);
  CHECK(out[2] == 0xbc57ac4cu);
  CHECK(out[3] == 0x9b00dbd8u);
}

TEST_CASE("streams are deterministic and split independently") {
  RandomStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  RandomStream c = RandomStream(42).split(1), d = RandomStream(42).split(2);
  int equal = 0;
  for (int i = 0; i < 100; ++i) equal += c.next_u64() == d.next_u64();
  CHECK(equal == 0);
}

TEST_CASE("uniform ranges") {
  RandomStream r(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = r.uniform();
    CHECK((u >= 0.0 && u < 1.0));
    const double v = r.uniform_open_closed();
    CHECK((v > 0.0 && v <= 1.0));
    CHECK(r.below(7) < 7);
  }
}

TEST_CASE("samples stay in the support") {
  RandomStream r(3);
  const auto g = parse_descriptor("A1");
  for (auto method : {SamplerMethod::inverse_cdf, SamplerMethod::decomposition}) {
    for (auto v : sample(g, Statistic::inv, 1000, r, method)) CHECK((v == 0 || v == 1));
  }
}

TEST_CASE("same stream, same samples") {
  const auto g = parse_descriptor("B6");
  RandomStream r1(9), r2(9);
  CHECK(sample(g, Statistic::des, 500, r1, SamplerMethod::inverse_cdf) ==
        sample(g, Statistic::des, 500, r2, SamplerMethod::inverse_cdf));
}

TEST_CASE("empirical mean within four standard errors") {
  const auto g = parse_descriptor("A5");
  for (auto stat : {Statistic::inv, Statistic::des}) {
    const auto m = moments(g, stat);
    for (auto method : {SamplerMethod::inverse_cdf, SamplerMethod::decomposition}) {
      RandomStream r(11);
      const auto xs = sample(g, stat, 100'000, r, method);
      double mean = 0;
      for (auto x : xs) mean += static_cast<double>(x);
      mean /= static_cast<double>(xs.size());
      CHECK(std::abs(mean - m.mean_f) < 4 * std::sqrt(m.var_f / 1e5));
    }
  }
}

TEST_CASE("both samplers agree by a two-sample KS test") {
  const auto g = parse_descriptor("A8 x I2(5)");
  for (auto stat : {Statistic::inv, Statistic::des}) {
    RandomStream r1(21), r2(22);
    auto a = sample(g, stat, 100'000, r1, SamplerMethod::inverse_cdf);
    auto b = sample(g, stat, 100'000, r2, SamplerMethod::decomposition);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    // Empirical CDFs compared at every support point.
    double d = 0;
    const auto top = std::max(a.back(), b.back());
    for (std::int64_t k = 0; k <= top; ++k) {
      const double fa = static_cast<double>(std::upper_bound(a.begin(), a.end(), k) - a.begin()) / 1e5;
      const double fb = static_cast<double>(std::upper_bound(b.begin(), b.end(), k) - b.begin()) / 1e5;
      d = std::max(d, std::abs(fa - fb));
    }
    // 1% critical value 1.628 * sqrt(2 / 1e5).
    CHECK(d < 1.628 * std::sqrt(2.0 / 1e5));
  }
}

TEST_CASE("sampler method names") {
  CHECK(parse_sampler_method("decomposition") == SamplerMethod::decomposition);
  CHECK(to_string(SamplerMethod::inverse_cdf) == "inverse_cdf");
}
