#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "coxext/groups.hpp"

namespace coxext {

enum class Statistic { inv, des };

std::string to_string(Statistic s);
Statistic parse_statistic(std::string_view text);

/// Neumaier's variant of compensated summation.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  static double abs(double v) noexcept { return v < 0 ? -v : v; }
  double sum_ = 0.0;
  double comp_ = 0.0;
};

double total_mass(std::span<const double> mass);

/// Law of a permutation statistic on {0, ..., K}.
struct Pmf {
  std::vector<double> mass;
  std::optional<std::vector<mpz_class>> counts;  // exact, sums to the group order
  Statistic statistic = Statistic::inv;
  GroupDescriptor group;

  std::size_t max_value() const noexcept { return mass.empty() ? 0 : mass.size() - 1; }
};

/// Masses from exact counts: counts[k] / sum(counts), correctly rounded to
/// within a couple of ulps.
std::vector<double> normalize_counts(std::span<const mpz_class> counts);

/// Law of X + U{0, ..., d-1}. Each output cell is a window sum over the input,
/// taken from prefix sums in the lower half of the mass and from suffix sums in
/// the upper half so both tails keep their relative accuracy.
std::vector<double> convolve_uniform(std::span<const double> mass, std::uint64_t d);

/// In-place form of convolve_uniform that keeps its scratch buffers between
/// calls, for long chains.
class UniformConvolver {
 public:
  void apply(std::vector<double>& mass, std::uint64_t d);

 private:
  std::vector<double> prefix_, suffix_;
};
Pmf convolve_uniform(const Pmf& pmf, std::uint64_t d);

/// Plain discrete convolution (sum of independent variables).
std::vector<double> convolve(std::span<const double> a, std::span<const double> b);

/// Prefix and suffix sums of a PMF. Upper tails are accumulated from the top
/// of the support so that 1 - F stays accurate where F is close to one.
class CdfTable {
 public:
  CdfTable() = default;
  explicit CdfTable(std::span<const double> mass);

  std::int64_t max_value() const noexcept { return static_cast<std::int64_t>(upper_.size()) - 1; }
  /// P(X <= k)
  double cdf(std::int64_t k) const noexcept;
  /// P(X > k)
  double upper_tail(std::int64_t k) const noexcept;
  /// Smallest k with P(X > k) < v, for v in (0, 1]. Inverse-CDF sampling
  /// through the upper tail.
  std::int64_t quantile_from_tail(double v) const noexcept;

 private:
  std::vector<double> lower_;  // lower_[k] = P(X <= k)
  std::vector<double> upper_;  // upper_[k] = P(X > k)
};

}  // namespace coxext
