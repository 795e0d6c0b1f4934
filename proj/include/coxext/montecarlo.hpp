#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coxext/extremes.hpp"
#include "coxext/sampling.hpp"
#include "coxext/sequence.hpp"

namespace coxext {

struct SimConfig {
  SequenceSpec spec;
  Statistic stat = Statistic::des;
  std::vector<std::uint64_t> rows;
  std::uint64_t replicates = 1000;
  std::uint64_t seed = 0;
  /// Unset: inverse-CDF when the law fits the materialization budget,
  /// decomposition otherwise.
  std::optional<SamplerMethod> method;
  unsigned threads = 0;  // 0 = hardware concurrency
  Limits limits;
  std::uint64_t max_pmf_cells = 50'000'000;
};

struct RowResult {
  std::uint64_t n = 0;
  std::string group;
  std::uint64_t rank = 0;
  GumbelNorm norm;
  SamplerMethod method = SamplerMethod::inverse_cdf;
  std::vector<std::int64_t> maxima;  // raw row maxima, by replicate
  std::vector<double> normalized;    // (M_n - b_n) / a_n, by replicate
  double ks_gumbel = 0.0;
  std::optional<double> ks_exact;  // against F^n when the law is materialized
  double wall_seconds = 0.0;
};

struct SimReport {
  SimConfig config;
  std::vector<RowResult> rows;
};

/// Replicate r of row n draws its n samples from
/// RandomStream(seed).split(n).split(r), so output does not depend on thread
/// count or scheduling.
RowResult simulate_row(const SimConfig& config, std::uint64_t n);
std::vector<double> simulate_row_max(const SimConfig& config, std::uint64_t n);
SimReport simulate(const SimConfig& config);

/// Kolmogorov-Smirnov distance between the empirical law of the samples and
/// a cdf. With left_limit (x -> F(x-)) the statistic is exact for discrete
/// laws; ties are grouped so the empirical step is taken once per value.
double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf,
                    const std::function<double(double)>& left_limit = {});

}  // namespace coxext
