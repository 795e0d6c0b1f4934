#include "coxext/pmf.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "coxext/errors.hpp"

namespace coxext {

std::string to_string(Statistic s) { return s == Statistic::inv ? "inv" : "des"; }

Statistic parse_statistic(std::string_view text) {
  if (text == "inv") return Statistic::inv;
  if (text == "des") return Statistic::des;
  throw DomainError("unknown statistic '" + std::string(text) + "' (expected inv or des)");
}

double total_mass(std::span<const double> mass) {
  CompensatedSum s;
  for (double m : mass) s.add(m);
  return s.value();
}

std::vector<double> normalize_counts(std::span<const mpz_class> counts) {
  mpz_class total = 0;
  for (const auto& c : counts) total += c;
  if (total <= 0) throw DomainError("counts must have a positive total");
  std::vector<double> out;
  out.reserve(counts.size());
  for (const auto& c : counts) {
    if (c < 0) throw DomainError("counts must be nonnegative");
    out.push_back(mpq_class(c, total).get_d());
  }
  return out;
}

void UniformConvolver::apply(std::vector<double>& mass, std::uint64_t d) {
  if (d < 1) throw DomainError("uniform summand needs d >= 1");
  if (mass.empty()) throw DomainError("empty pmf");
  if (d == 1) return;
  const std::size_t n = mass.size();
  prefix_.resize(n + 1);
  suffix_.resize(n + 1);
  {
    CompensatedSum s;
    prefix_[0] = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      s.add(mass[i]);
      prefix_[i + 1] = s.value();
    }
  }
  {
    CompensatedSum s;
    suffix_[n] = 0.0;
    for (std::size_t i = n; i-- > 0;) {
      s.add(mass[i]);
      suffix_[i] = s.value();
    }
  }
  const double total = prefix_[n];
  const double inv_d = 1.0 / static_cast<double>(d);
  const std::size_t out_size = n + d - 1;
  mass.resize(out_size);
  for (std::size_t k = 0; k < out_size; ++k) {
    const std::size_t lo = k + 1 >= d ? k + 1 - d : 0;
    const std::size_t hi = std::min(k, n - 1);  // inclusive
    const double window = prefix_[hi + 1] <= 0.5 * total ? prefix_[hi + 1] - prefix_[lo]
                                                         : suffix_[lo] - suffix_[hi + 1];
    double v = window * inv_d;
    if (v < DBL_MIN) v = 0.0;  // keep subnormals out of long chains
    mass[k] = v;
  }
}

std::vector<double> convolve_uniform(std::span<const double> mass, std::uint64_t d) {
  std::vector<double> out(mass.begin(), mass.end());
  UniformConvolver().apply(out, d);
  return out;
}

Pmf convolve_uniform(const Pmf& pmf, std::uint64_t d) {
  Pmf out;
  out.mass = convolve_uniform(pmf.mass, d);
  out.statistic = pmf.statistic;
  out.group = pmf.group;
  return out;
}

std::vector<double> convolve(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw DomainError("empty pmf");
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0.0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  for (auto& v : out) {
    if (v < DBL_MIN) v = 0.0;
  }
  return out;
}

CdfTable::CdfTable(std::span<const double> mass) : lower_(mass.size()), upper_(mass.size()) {
  CompensatedSum lo;
  for (std::size_t k = 0; k < mass.size(); ++k) {
    lo.add(mass[k]);
    lower_[k] = lo.value();
  }
  CompensatedSum up;
  for (std::size_t k = mass.size(); k-- > 0;) {
    upper_[k] = up.value();  // mass strictly above k
    up.add(mass[k]);
  }
}

double CdfTable::cdf(std::int64_t k) const noexcept {
  if (k < 0) return 0.0;
  if (k >= max_value()) return 1.0;
  const auto i = static_cast<std::size_t>(k);
  // Whichever side is smaller carries the better relative accuracy.
  return lower_[i] <= 0.5 ? lower_[i] : 1.0 - upper_[i];
}

double CdfTable::upper_tail(std::int64_t k) const noexcept {
  if (k < 0) return 1.0;
  if (k >= max_value()) return 0.0;
  const auto i = static_cast<std::size_t>(k);
  return upper_[i] <= 0.5 ? upper_[i] : 1.0 - lower_[i];
}

std::int64_t CdfTable::quantile_from_tail(double v) const noexcept {
  // upper_ is nonincreasing; find the first k with upper_[k] < v.
  const auto it = std::partition_point(upper_.begin(), upper_.end(), [v](double t) { return t >= v; });
  if (it == upper_.end()) return max_value();
  return static_cast<std::int64_t>(it - upper_.begin());
}

}  // namespace coxext
