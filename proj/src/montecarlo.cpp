#include "coxext/montecarlo.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

#include "coxext/errors.hpp"

namespace coxext {

double ks_statistic(std::span<const double> samples, const std::function<double(double)>& cdf,
                    const std::function<double(double)>& left_limit) {
  if (samples.empty()) throw DomainError("KS statistic needs at least one sample");
  std::vector<double> xs(samples.begin(), samples.end());
  std::sort(xs.begin(), xs.end());
  const double r = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size();) {
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
    const double v = xs[i];
    const double below = left_limit ? left_limit(v) : cdf(v);
    d = std::max(d, std::abs(static_cast<double>(i) / r - below));
    d = std::max(d, std::abs(static_cast<double>(j + 1) / r - cdf(v)));
    i = j + 1;
  }
  return d;
}

namespace {

bool law_fits(const GroupDescriptor& g, Statistic stat, const SimConfig& c) {
  const std::uint64_t cells = stat == Statistic::inv ? g.reflection_count() : g.rank();
  return cells < c.max_pmf_cells;
}

}  // namespace

RowResult simulate_row(const SimConfig& config, std::uint64_t n) {
  if (config.replicates < 1) throw DomainError("replicates must be >= 1");
  if (n < 1) throw DomainError("row size n must be >= 1");
  const auto start = std::chrono::steady_clock::now();

  RowResult row;
  row.n = n;
  const GroupDescriptor g = materialize(config.spec, n);
  row.group = g.to_string();
  row.rank = g.rank();

  const Moments m = moments(g, config.stat, config.limits);
  // Rows with n = 1 have no Gumbel scaling; use the plain standardization.
  if (n >= 2) {
    row.norm = norming_constants(n, m);
  } else {
    row.norm = GumbelNorm{1, 0.0, 0.0, std::sqrt(m.var_f), m.mean_f, std::sqrt(m.var_f)};
  }

  const bool fits = law_fits(g, config.stat, config);
  row.method = config.method.value_or(fits ? SamplerMethod::inverse_cdf : SamplerMethod::decomposition);
  std::optional<Pmf> pmf;
  if (row.method == SamplerMethod::inverse_cdf || fits) pmf = statistic_pmf(g, config.stat, config.limits);
  const StatisticSampler sampler = row.method == SamplerMethod::inverse_cdf
                                       ? make_sampler(*pmf)
                                       : make_sampler(g, config.stat, row.method, config.limits);

  row.maxima.assign(config.replicates, 0);
  unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, config.replicates));
  const RandomStream row_stream = RandomStream(config.seed).split(n);
  auto work = [&](std::uint64_t begin, std::uint64_t end) {
    for (std::uint64_t r = begin; r < end; ++r) {
      RandomStream rng = row_stream.split(r);
      std::int64_t best = sampler.draw(rng);
      for (std::uint64_t i = 1; i < n; ++i) best = std::max(best, sampler.draw(rng));
      row.maxima[r] = best;
    }
  };
  if (threads <= 1) {
    work(0, config.replicates);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (config.replicates + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t b = t * chunk, e = std::min(config.replicates, b + chunk);
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& th : pool) th.join();
  }

  row.normalized.reserve(row.maxima.size());
  for (const auto v : row.maxima) {
    row.normalized.push_back((static_cast<double>(v) - row.norm.b) / row.norm.a);
  }
  row.ks_gumbel = ks_statistic(row.normalized, gumbel_cdf);
  if (pmf) {
    const CdfTable table(pmf->mass);
    std::vector<double> raw(row.maxima.begin(), row.maxima.end());
    row.ks_exact = ks_statistic(
        raw, [&](double t) { return exact_max_cdf(table, n, t); },
        [&](double t) { return exact_max_cdf(table, n, t - 1); });
  }
  row.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<double> simulate_row_max(const SimConfig& config, std::uint64_t n) {
  return simulate_row(config, n).normalized;
}

SimReport simulate(const SimConfig& config) {
  if (config.rows.empty()) throw DomainError("simulation needs at least one row");
  SimReport rep;
  rep.config = config;
  for (const auto n : config.rows) rep.rows.push_back(simulate_row(config, n));
  return rep;
}

}  // namespace coxext
