#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "coxext/groups.hpp"
#include "coxext/pmf.hpp"
#include "coxext/polynomial.hpp"
#include "coxext/roots.hpp"

namespace coxext {

/// Size limits for the exact and root-finding routes. All configurable.
struct Limits {
  std::uint64_t exact_inv_reflections = 100'000;  // mahonian_pmf(exact=true)
  std::uint64_t eulerian_factor_rank = 10'000;    // exact Eulerian polynomial per factor
  std::uint64_t eulerian_exact_rank = 300;        // eulerian_pmf switches to floating above
  std::uint64_t root_factor_rank = 300;           // root extraction per irreducible factor
};

Pmf mahonian_pmf(const GroupDescriptor& g, bool exact, const Limits& limits = {});
/// prod (1 + z + ... + z^(d_i - 1)) over the degrees.
IntPolynomial mahonian_polynomial(const GroupDescriptor& g, const Limits& limits = {});

IntPolynomial eulerian_polynomial(const IrreducibleFactor& f, const Limits& limits = {});
IntPolynomial eulerian_polynomial(const GroupDescriptor& g, const Limits& limits = {});
/// Eulerian distribution of a single factor computed directly in normalized
/// floating form (no big integers). Far-tail cells may underflow to zero.
std::vector<double> eulerian_normalized(const IrreducibleFactor& f);
Pmf eulerian_pmf(const GroupDescriptor& g, const Limits& limits = {});
/// Floating law of either statistic (Mahonian by convolution, Eulerian per
/// eulerian_pmf).
Pmf statistic_pmf(const GroupDescriptor& g, Statistic stat, const Limits& limits = {});

struct Moments {
  mpq_class mean;
  mpq_class variance;
  double mean_f = 0.0;
  double var_f = 0.0;
};

Moments moments(const GroupDescriptor& g, Statistic stat, const Limits& limits = {});
/// Mean and variance of the exact counts of a PMF. Requires counts.
Moments moments_from_counts(const Pmf& pmf);
/// Closed-form descent variance of one irreducible factor.
mpq_class descent_variance_closed_form(const IrreducibleFactor& f);

struct BernoulliParams {
  std::vector<double> p;  // ascending, p_i = 1 / (1 + q_i)
};

/// Negated roots of the Eulerian polynomial, extracted per distinct factor
/// (subject to the per-factor rank cap) and merged.
RootList eulerian_roots(const GroupDescriptor& g, double rel_tol = 1e-12, const Limits& limits = {});

BernoulliParams descent_bernoulli_params(const GroupDescriptor& g, double rel_tol = 1e-12,
                                         const Limits& limits = {});

}  // namespace coxext
