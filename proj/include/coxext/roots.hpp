#pragma once

#include <cstddef>
#include <vector>

#include "coxext/polynomial.hpp"

namespace coxext {

struct RootCluster {
  double q = 0.0;
  std::size_t multiplicity = 1;
};

/// Negated roots q of a real-rooted polynomial with positive coefficients,
/// i.e. p(z) = lead * prod (z + q_i).
struct RootList {
  std::vector<double> q;               // ascending, repeated by multiplicity
  std::vector<RootCluster> clusters;   // distinct values with multiplicity
  double residual = 0.0;               // max |p(-q)| / sum |c_k| q^k over clusters
};

struct SquarefreeFactor {
  IntPolynomial poly;  // primitive, positive leading coefficient
  std::size_t multiplicity = 1;
};

/// Yun decomposition p = c * prod f_i^i over the rationals.
std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p);

/// Exact sign of p(-q) for a finite double q >= 0.
int sign_at_negative(const IntPolynomial& p, double q);

/// Locates every root of p in (-inf, 0). Roots are bracketed by exact sign
/// changes on a logarithmic grid between the Vieta bounds c0/c1 and
/// c_{n-1}/c_n, then refined by Newton steps that never leave the bracket.
/// Throws DomainError for non-positive coefficients and NumericalError when
/// the grid budget runs out (violated real-rootedness or a tight cluster).
RootList isolate_negative_real_roots(const IntPolynomial& p, double rel_tol = 1e-12);

}  // namespace coxext
