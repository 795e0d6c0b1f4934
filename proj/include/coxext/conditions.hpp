#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "coxext/pmf.hpp"
#include "coxext/sequence.hpp"

namespace coxext {

/// Per-row quantities of a group sequence. Norms are stored unsquared and
/// computed with scaling, so dihedral orders near the double range (2^i
/// schedules) still give finite ratios.
struct SequenceProfile {
  std::uint64_t n = 0;
  std::uint64_t classical_rank = 0;  // N_n
  std::uint64_t dihedral_count = 0;  // k_n
  std::uint64_t total_rank = 0;      // R_n = N_n + 2 k_n
  std::uint64_t n_max = 0;           // largest classical factor rank
  double m_max = 0.0;
  double classical_norm = 0.0;  // sqrt(sum rk^3) over classical factors
  double dihedral_norm = 0.0;   // sqrt(sum m^2)
  double inverse_order_sum = 0.0;  // m_n = sum 1/m
  double mean = 0.0;
  double sd = 0.0;  // s_n for the profiled statistic
  double d_max = 0.0;
  double lambda = 0.0;  // largest centered summand over s_n
  Statistic statistic = Statistic::inv;
};

SequenceProfile profile_row(const SequenceRow& row, Statistic stat);
std::vector<SequenceProfile> profile_sequence(const SequenceSpec& spec,
                                              std::span<const std::uint64_t> ns, Statistic stat);

enum class ConditionId {
  rank_growth,
  inv_classical,
  des_variance,
  inv_products,
  inv_dihedral,
  des_dihedral,
  dihedral_power_inv,
  dihedral_power_des,
};

std::string to_string(ConditionId id);
ConditionId parse_condition(std::string_view text);

enum class Verdict { satisfied, violated, inconclusive };
std::string to_string(Verdict v);

struct ConditionReport {
  ConditionId condition = ConditionId::rank_growth;
  std::vector<std::uint64_t> ns;
  std::vector<double> ratios;
  std::vector<double> alt_ratios;  // des_variance only: sqrt(n) / s_n
  double slope = 0.0;              // least squares fit of log r against log n
  double intercept = 0.0;
  double r_squared = 1.0;
  Verdict verdict = Verdict::inconclusive;
  std::string note;
};

/// Ratio of one condition for one profile row.
double condition_ratio(ConditionId id, const SequenceProfile& p);

/// Finite-sample trend diagnostic. Needs at least four rows spanning two
/// decades of n. Bounded ratios: satisfied when the log-log slope is at most
/// 0.05, violated when it exceeds 0.05 with R^2 >= 0.8. rank_growth: satisfied
/// when the ratio strictly decreases with slope below -0.05, violated when the
/// slope is at least -0.05.
ConditionReport check_growth(std::span<const SequenceProfile> profiles, ConditionId id);

struct NormForm {
  double lhs = 0.0;    // max m_i
  double rhs = 0.0;    // ||m||_2 / sqrt(k)
  double ratio = 0.0;  // lhs / rhs
  mpq_class ratio_squared;  // k max^2 / sum m^2, exact
};

NormForm norm_form_check(std::span<const mpz_class> m);

}  // namespace coxext
