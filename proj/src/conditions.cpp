#include "coxext/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "coxext/errors.hpp"
#include "coxext/statistics.hpp"

namespace coxext {

namespace {

/// sqrt(sum x_i^2) with running rescaling.
class ScaledNorm {
 public:
  void add(double x) {
    x = std::abs(x);
    if (x == 0) return;
    if (x > scale_) {
      sum_ = 1.0 + sum_ * (scale_ / x) * (scale_ / x);
      scale_ = x;
    } else {
      sum_ += (x / scale_) * (x / scale_);
    }
  }
  double value() const { return scale_ * std::sqrt(sum_); }

 private:
  double scale_ = 0.0;
  double sum_ = 0.0;
};

/// Sum over the degrees of (d^2 - 1) / 12, in closed form.
long double inv_variance(const IrreducibleFactor& f) {
  const long double n = static_cast<long double>(f.param);
  auto squares_to = [](long double k) { return k * (k + 1) * (2 * k + 1) / 6; };
  long double sq = 0;
  switch (f.kind) {
    case FactorKind::A: sq = squares_to(n + 1) - 1; break;
    case FactorKind::B: sq = 4 * squares_to(n); break;
    case FactorKind::D: sq = 4 * squares_to(n - 1) + n * n; break;
    case FactorKind::I2: sq = 4 + n * n; break;
  }
  return (sq - static_cast<long double>(f.rank())) / 12;
}

long double inv_mean(const IrreducibleFactor& f) {
  return static_cast<long double>(GroupDescriptor({f}).reflection_count()) / 2;
}

std::uint64_t max_degree(const IrreducibleFactor& f) {
  switch (f.kind) {
    case FactorKind::A: return f.param + 1;
    case FactorKind::B: return 2 * f.param;
    case FactorKind::D: return f.param == 2 ? 2 : 2 * f.param - 2;
    case FactorKind::I2: return f.param;
  }
  return 0;
}

}  // namespace

SequenceProfile profile_row(const SequenceRow& row, Statistic stat) {
  SequenceProfile p;
  p.n = row.n;
  p.statistic = stat;
  p.dihedral_count = row.dihedral_orders.size();

  ScaledNorm classical, dihedral;
  long double classical_var = 0, mean = 0;
  for (const auto& f : row.classical) {
    p.classical_rank += f.rank();
    p.n_max = std::max(p.n_max, f.rank());
    const double r = static_cast<double>(f.rank());
    classical.add(r * std::sqrt(r));
    p.d_max = std::max(p.d_max, static_cast<double>(max_degree(f)));
    if (stat == Statistic::inv) {
      classical_var += inv_variance(f);
      mean += inv_mean(f);
    } else {
      classical_var += descent_variance_closed_form(f).get_d();
      mean += static_cast<long double>(f.rank()) / 2;
    }
  }
  long double dihedral_small = 0;  // inv: k/6 part; des: sum 1/m
  for (const double m : row.dihedral_orders) {
    p.m_max = std::max(p.m_max, m);
    dihedral.add(m);
    p.inverse_order_sum += 1.0 / m;
    p.d_max = std::max(p.d_max, m);
    if (stat == Statistic::inv) {
      dihedral_small += 1.0L / 6;
      mean += static_cast<long double>(m) / 2;
    } else {
      dihedral_small += 1.0L / static_cast<long double>(m);
      mean += 1;
    }
  }
  if (!row.dihedral_orders.empty()) p.d_max = std::max(p.d_max, 2.0);
  p.total_rank = p.classical_rank + 2 * p.dihedral_count;
  p.classical_norm = classical.value();
  p.dihedral_norm = dihedral.value();
  p.mean = static_cast<double>(mean);

  ScaledNorm sd;
  sd.add(static_cast<double>(std::sqrt(classical_var + dihedral_small)));
  if (stat == Statistic::inv) sd.add(p.dihedral_norm / std::sqrt(12.0));
  p.sd = sd.value();
  if (!(p.sd > 0)) throw DomainError("row n=" + std::to_string(row.n) + " has zero variance");
  p.lambda = stat == Statistic::inv ? (p.d_max - 1) / (2 * p.sd) : 1.0 / p.sd;
  return p;
}

std::vector<SequenceProfile> profile_sequence(const SequenceSpec& spec,
                                              std::span<const std::uint64_t> ns, Statistic stat) {
  std::vector<SequenceProfile> out;
  out.reserve(ns.size());
  for (const auto n : ns) out.push_back(profile_row(materialize_row(spec, n), stat));
  return out;
}

std::string to_string(ConditionId id) {
  switch (id) {
    case ConditionId::rank_growth: return "rank_growth";
    case ConditionId::inv_classical: return "inv_classical";
    case ConditionId::des_variance: return "des_variance";
    case ConditionId::inv_products: return "inv_products";
    case ConditionId::inv_dihedral: return "inv_dihedral";
    case ConditionId::des_dihedral: return "des_dihedral";
    case ConditionId::dihedral_power_inv: return "dihedral_power_inv";
    case ConditionId::dihedral_power_des: return "dihedral_power_des";
  }
  return "?";
}

ConditionId parse_condition(std::string_view text) {
  for (auto id : {ConditionId::rank_growth, ConditionId::inv_classical, ConditionId::des_variance,
                  ConditionId::inv_products, ConditionId::inv_dihedral,
                  ConditionId::des_dihedral, ConditionId::dihedral_power_inv, ConditionId::dihedral_power_des}) {
    if (to_string(id) == text) return id;
  }
  throw DomainError("unknown condition '" + std::string(text) + "'");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::satisfied: return "satisfied";
    case Verdict::violated: return "violated";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

double condition_ratio(ConditionId id, const SequenceProfile& p) {
  const double N = static_cast<double>(p.classical_rank);
  const double R = static_cast<double>(p.total_rank);
  const double k = static_cast<double>(p.dihedral_count);
  const double nmax = static_cast<double>(p.n_max);
  switch (id) {
    case ConditionId::rank_growth: {
      const double l = std::log(static_cast<double>(p.n));
      return l * l * l / R;
    }
    case ConditionId::inv_classical: return nmax * std::sqrt(N) / p.sd;
    case ConditionId::des_variance: return std::sqrt(N) / p.sd;
    case ConditionId::inv_products: return nmax * std::sqrt(N) / p.classical_norm;
    case ConditionId::inv_dihedral:
      return std::max(nmax, p.m_max) * std::sqrt(R) / std::hypot(p.classical_norm, p.dihedral_norm);
    case ConditionId::des_dihedral: return std::sqrt(R) / (N + p.inverse_order_sum);
    case ConditionId::dihedral_power_inv: return p.m_max * std::sqrt(k) / p.dihedral_norm;
    case ConditionId::dihedral_power_des: return k / p.inverse_order_sum;
  }
  return 0.0;
}

ConditionReport check_growth(std::span<const SequenceProfile> profiles, ConditionId id) {
  if (profiles.size() < 4) throw DomainError("condition check needs at least 4 values of n");
  ConditionReport rep;
  rep.condition = id;
  std::uint64_t lo = profiles.front().n, hi = profiles.front().n;
  for (const auto& p : profiles) {
    lo = std::min(lo, p.n);
    hi = std::max(hi, p.n);
  }
  if (static_cast<double>(hi) < 100.0 * static_cast<double>(lo)) {
    throw DomainError("condition check needs n values spanning at least two decades");
  }

  std::vector<double> xs, ys;
  for (const auto& p : profiles) {
    const double r = condition_ratio(id, p);
    rep.ns.push_back(p.n);
    rep.ratios.push_back(r);
    if (id == ConditionId::des_variance) {
      rep.alt_ratios.push_back(std::sqrt(static_cast<double>(p.n)) / p.sd);
    }
    if (!(r > 0) || !std::isfinite(r)) {
      throw DomainError("ratio of " + to_string(id) + " is not positive and finite at n=" +
                        std::to_string(p.n));
    }
    xs.push_back(std::log(static_cast<double>(p.n)));
    ys.push_back(std::log(r));
  }

  const double m = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= m;
  my /= m;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  rep.slope = sxy / sxx;
  rep.intercept = my - rep.slope * mx;
  // A constant sequence is fitted perfectly.
  rep.r_squared = syy <= 1e-24 * m ? 1.0 : (sxy * sxy) / (sxx * syy);

  if (id == ConditionId::rank_growth) {
    bool decreasing = true;
    std::vector<std::size_t> order(profiles.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rep.ns[a] < rep.ns[b]; });
    for (std::size_t i = 1; i < order.size(); ++i) {
      if (!(rep.ratios[order[i]] < rep.ratios[order[i - 1]])) decreasing = false;
    }
    if (rep.slope >= -0.05) {
      rep.verdict = Verdict::violated;
    } else {
      rep.verdict = decreasing ? Verdict::satisfied : Verdict::inconclusive;
    }
    rep.note = "ratio log(n)^3 / R_n must tend to 0";
  } else {
    if (rep.slope <= 0.05) {
      rep.verdict = Verdict::satisfied;
    } else if (rep.r_squared >= 0.8) {
      rep.verdict = Verdict::violated;
    } else {
      rep.verdict = Verdict::inconclusive;
    }
    if (id == ConditionId::des_variance) {
      rep.note = "verdict uses sqrt(N_n)/s_n; alt_ratios holds sqrt(n)/s_n";
    }
  }
  return rep;
}

NormForm norm_form_check(std::span<const mpz_class> m) {
  if (m.empty()) throw DomainError("norm check needs a nonempty vector");
  mpz_class mx = 0, sum_sq = 0;
  for (const auto& v : m) {
    if (v <= 0) throw DomainError("dihedral orders must be positive");
    if (v > mx) mx = v;
    sum_sq += v * v;
  }
  const auto k = static_cast<unsigned long>(m.size());
  NormForm out;
  out.ratio_squared = mpq_class(mx * mx * k, sum_sq);
  out.ratio_squared.canonicalize();
  out.lhs = mx.get_d();
  mpf_class rhs(sum_sq, 256);
  rhs /= k;
  rhs = sqrt(rhs);
  out.rhs = rhs.get_d();
  mpf_class ratio(out.ratio_squared, 256);
  ratio = sqrt(ratio);
  out.ratio = ratio.get_d();
  return out;
}

}  // namespace coxext
