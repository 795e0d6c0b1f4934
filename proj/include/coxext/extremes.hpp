#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coxext/pmf.hpp"
#include "coxext/sequence.hpp"
#include "coxext/statistics.hpp"

namespace coxext {

double std_normal_cdf(double x);
/// 1 - Phi(x), evaluated through erfc so the far right tail keeps full
/// relative precision.
double std_normal_upper_tail(double x);
/// Lambda(x) = exp(-exp(-x))
double gumbel_cdf(double x);

/// Norming constants for the row maxima of n i.i.d. copies with mean mu and
/// standard deviation s: a = s / alpha_n, b = mu + s * beta_n, where
/// alpha_n = sqrt(2 ln n) and beta_n = alpha_n - (ln ln n + ln 4 pi) / (2 alpha_n).
/// a_literal = s * alpha_n is the scale obtained by reading the normal
/// attraction as (M_n - beta_n) / alpha_n; it does not give a Gumbel limit
/// and is reported for comparison only.
struct GumbelNorm {
  std::uint64_t n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double a = 0.0;
  double b = 0.0;
  double a_literal = 0.0;
};

GumbelNorm norming_constants(std::uint64_t n, double mean, double sd);
GumbelNorm norming_constants(std::uint64_t n, const Moments& m);

/// P(max of n i.i.d. draws <= t) = F(floor t)^n, via exp(n log1p(-T)) with T
/// the upper tail above floor(t).
double exact_max_cdf(const CdfTable& table, std::uint64_t n, double t);
double exact_max_cdf(const Pmf& pmf, std::uint64_t n, double t);

struct Grid {
  double x_min = -3.0;
  double x_max = 6.0;
  double step = 0.01;

  std::size_t size() const;
  double at(std::size_t i) const { return x_min + step * static_cast<double>(i); }
};

struct SupError {
  double sup_error = 0.0;
  double argmax_x = 0.0;
};

SupError gumbel_sup_error(const CdfTable& table, const GumbelNorm& norm, const Grid& grid = {});
SupError gumbel_sup_error(const Pmf& pmf, const Moments& m, std::uint64_t n, const Grid& grid = {});

struct TailRatio {
  double x = 0.0;
  double tail = 0.0;         // P(X > mu + s x)
  double normal_tail = 0.0;  // 1 - Phi(x)
  std::optional<double> ratio;  // empty when the numerator underflows to zero
  /// Same ratio for the jittered law X + U, U ~ U(-1/2, 1/2), which removes
  /// the lattice step of P(X > t) (a continuity correction). Diagnostic only.
  std::optional<double> smoothed_ratio;
  bool beyond_moderate_zone = false;  // x > N^(1/6) for N summands
};

/// P(X > mu + s x) / (1 - Phi(x)) for each x, upper tails summed from the top.
std::vector<TailRatio> tail_ratio(const Pmf& pmf, const Moments& m, std::span<const double> xs);

struct ConvergenceRow {
  std::uint64_t n = 0;
  std::uint64_t rank = 0;  // N_n
  double a = 0.0;
  double b = 0.0;
  double sup_error = 0.0;
  double argmax_x = 0.0;
};

struct ConvergenceReport {
  Statistic statistic = Statistic::inv;
  Grid grid;
  std::vector<ConvergenceRow> rows;
};

/// Exact Gumbel sup-error for each row n of a sequence: the row group's law is
/// materialized in floating form and F^n compared with Lambda on the grid.
ConvergenceReport gumbel_convergence(const SequenceSpec& spec, Statistic stat,
                                     std::span<const std::uint64_t> ns, const Grid& grid = {},
                                     const Limits& limits = {});

}  // namespace coxext
