#include "coxext/extremes.hpp"

#include <cmath>
#include <numbers>

#include "coxext/errors.hpp"

namespace coxext {

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double std_normal_upper_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double gumbel_cdf(double x) { return std::exp(-std::exp(-x)); }

GumbelNorm norming_constants(std::uint64_t n, double mean, double sd) {
  if (n < 2) throw DomainError("norming constants need n >= 2");
  if (!(sd > 0)) throw DomainError("norming constants need a positive variance");
  const double log_n = std::log(static_cast<double>(n));
  GumbelNorm g;
  g.n = n;
  g.alpha = std::sqrt(2.0 * log_n);
  g.beta = g.alpha - (std::log(log_n) + std::log(4.0 * std::numbers::pi)) / (2.0 * g.alpha);
  // alpha_n (M_n - beta_n) -> Lambda for standard normal maxima, so the
  // scale is s / alpha_n. s * alpha_n is kept for reference only.
  g.a = sd / g.alpha;
  g.a_literal = sd * g.alpha;
  g.b = mean + sd * g.beta;
  return g;
}

GumbelNorm norming_constants(std::uint64_t n, const Moments& m) {
  return norming_constants(n, m.mean_f, std::sqrt(m.var_f));
}

double exact_max_cdf(const CdfTable& table, std::uint64_t n, double t) {
  if (n < 1) throw DomainError("exact_max_cdf needs n >= 1");
  if (std::isnan(t)) throw DomainError("exact_max_cdf: t is NaN");
  if (t < 0) return 0.0;
  const double fl = std::floor(t);
  if (fl >= static_cast<double>(table.max_value())) return 1.0;
  const double tail = table.upper_tail(static_cast<std::int64_t>(fl));
  if (tail >= 1.0) return 0.0;
  return std::exp(static_cast<double>(n) * std::log1p(-tail));
}

double exact_max_cdf(const Pmf& pmf, std::uint64_t n, double t) {
  return exact_max_cdf(CdfTable(pmf.mass), n, t);
}

std::size_t Grid::size() const {
  if (!(step > 0) || x_max < x_min) throw DomainError("grid needs step > 0 and x_max >= x_min");
  return static_cast<std::size_t>(std::floor((x_max - x_min) / step + 1e-9)) + 1;
}

SupError gumbel_sup_error(const CdfTable& table, const GumbelNorm& norm, const Grid& grid) {
  SupError out;
  out.argmax_x = grid.x_min;
  const std::size_t points = grid.size();
  for (std::size_t i = 0; i < points; ++i) {
    const double x = grid.at(i);
    const double err = std::abs(exact_max_cdf(table, norm.n, norm.a * x + norm.b) - gumbel_cdf(x));
    if (err > out.sup_error) {
      out.sup_error = err;
      out.argmax_x = x;
    }
  }
  return out;
}

SupError gumbel_sup_error(const Pmf& pmf, const Moments& m, std::uint64_t n, const Grid& grid) {
  return gumbel_sup_error(CdfTable(pmf.mass), norming_constants(n, m), grid);
}

std::vector<TailRatio> tail_ratio(const Pmf& pmf, const Moments& m, std::span<const double> xs) {
  const CdfTable table(pmf.mass);
  const double sd = std::sqrt(m.var_f);
  const double zone = std::pow(static_cast<double>(std::max<std::uint64_t>(pmf.group.rank(), 1)),
                               1.0 / 6.0);
  std::vector<TailRatio> out;
  out.reserve(xs.size());
  for (double x : xs) {
    TailRatio r;
    r.x = x;
    const double t = m.mean_f + sd * x;
    // X > t  <=>  X > floor(t) for integer-valued X.
    if (t < 0) {
      r.tail = 1.0;
    } else if (std::floor(t) >= static_cast<double>(table.max_value())) {
      r.tail = 0.0;
    } else {
      r.tail = table.upper_tail(static_cast<std::int64_t>(std::floor(t)));
    }
    r.normal_tail = std_normal_upper_tail(x);
    if (r.tail > 0.0) r.ratio = r.tail / r.normal_tail;
    // P(X + U > t) = P(X > j) + P(X = j) (1/2 - (t - j)), j the integer nearest t.
    const double j = std::floor(t + 0.5);
    double smooth = 0.0;
    if (j < 0) {
      smooth = 1.0;
    } else if (j <= static_cast<double>(table.max_value())) {
      const auto k = static_cast<std::int64_t>(j);
      smooth = table.upper_tail(k) + pmf.mass[static_cast<std::size_t>(k)] * (0.5 - (t - j));
    }
    if (smooth > 0.0) r.smoothed_ratio = smooth / r.normal_tail;
    r.beyond_moderate_zone = x > zone;
    out.push_back(r);
  }
  return out;
}

ConvergenceReport gumbel_convergence(const SequenceSpec& spec, Statistic stat,
                                     std::span<const std::uint64_t> ns, const Grid& grid,
                                     const Limits& limits) {
  ConvergenceReport rep;
  rep.statistic = stat;
  rep.grid = grid;
  for (const auto n : ns) {
    const GroupDescriptor g = materialize(spec, n);
    const Pmf pmf = statistic_pmf(g, stat, limits);
    const GumbelNorm norm = norming_constants(n, moments(g, stat, limits));
    const SupError err = gumbel_sup_error(CdfTable(pmf.mass), norm, grid);
    rep.rows.push_back({n, g.rank(), norm.a, norm.b, err.sup_error, err.argmax_x});
  }
  return rep;
}

}  // namespace coxext
