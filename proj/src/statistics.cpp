#include "coxext/statistics.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>

#include "coxext/errors.hpp"
#include "coxext/roots.hpp"

namespace coxext {

namespace {

// Distinct irreducible factors with their multiplicities.
std::map<IrreducibleFactor, std::size_t> factor_counts(const GroupDescriptor& g) {
  std::map<IrreducibleFactor, std::size_t> out;
  for (const auto& f : g.factors()) ++out[f];
  return out;
}

// Eulerian numbers of the symmetric group on `letters` letters.
std::vector<mpz_class> symmetric_eulerian(std::uint64_t letters) {
  std::vector<mpz_class> row{1};
  for (std::uint64_t n = 2; n <= letters; ++n) {
    std::vector<mpz_class> next(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      if (k < row.size()) next[k] += row[k] * static_cast<unsigned long>(k + 1);
      if (k >= 1) next[k] += row[k - 1] * static_cast<unsigned long>(n - k);
    }
    row = std::move(next);
  }
  return row;
}

std::vector<mpz_class> type_b_eulerian(std::uint64_t n) {
  std::vector<mpz_class> row{1};
  for (std::uint64_t m = 1; m <= n; ++m) {
    std::vector<mpz_class> next(m + 1);
    for (std::uint64_t k = 0; k <= m; ++k) {
      if (k < row.size()) next[k] += row[k] * static_cast<unsigned long>(2 * k + 1);
      if (k >= 1) next[k] += row[k - 1] * static_cast<unsigned long>(2 * (m - k) + 1);
    }
    row = std::move(next);
  }
  return row;
}

std::vector<double> symmetric_eulerian_normalized(std::uint64_t letters) {
  std::vector<double> row{1.0};
  row.reserve(letters);
  std::vector<double> next;
  for (std::uint64_t n = 2; n <= letters; ++n) {
    next.assign(n, 0.0);
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::uint64_t k = 0; k < n; ++k) {
      double v = 0.0;
      if (k < row.size()) v += row[k] * static_cast<double>(k + 1);
      if (k >= 1) v += row[k - 1] * static_cast<double>(n - k);
      v *= inv_n;
      next[k] = v < DBL_MIN ? 0.0 : v;
    }
    row.swap(next);
  }
  return row;
}

std::vector<double> type_b_eulerian_normalized(std::uint64_t n) {
  std::vector<double> row{1.0};
  std::vector<double> next;
  for (std::uint64_t m = 1; m <= n; ++m) {
    next.assign(m + 1, 0.0);
    const double inv = 1.0 / static_cast<double>(2 * m);
    for (std::uint64_t k = 0; k <= m; ++k) {
      double v = 0.0;
      if (k < row.size()) v += row[k] * static_cast<double>(2 * k + 1);
      if (k >= 1) v += row[k - 1] * static_cast<double>(2 * (m - k) + 1);
      v *= inv;
      next[k] = v < DBL_MIN ? 0.0 : v;
    }
    row.swap(next);
  }
  return row;
}

mpq_class half(std::uint64_t n) {
  mpq_class q(static_cast<unsigned long>(n), 2ul);
  q.canonicalize();
  return q;
}

void finish(Moments& m) {
  m.mean.canonicalize();
  m.variance.canonicalize();
  m.mean_f = m.mean.get_d();
  m.var_f = m.variance.get_d();
}

}  // namespace

IntPolynomial mahonian_polynomial(const GroupDescriptor& g, const Limits& limits) {
  if (g.reflection_count() > limits.exact_inv_reflections) {
    throw DomainError("exact Mahonian cap exceeded: reflection count " +
                      std::to_string(g.reflection_count()) + " > " +
                      std::to_string(limits.exact_inv_reflections));
  }
  IntPolynomial p = IntPolynomial::one();
  for (auto d : degrees(g).degrees) p = multiply_geometric(p, d);
  return p;
}

Pmf mahonian_pmf(const GroupDescriptor& g, bool exact, const Limits& limits) {
  Pmf pmf;
  pmf.statistic = Statistic::inv;
  pmf.group = g;
  if (exact) {
    auto poly = mahonian_polynomial(g, limits);
    pmf.counts = poly.coeffs();
    pmf.mass = normalize_counts(*pmf.counts);
    return pmf;
  }
  const auto degs = degrees(g).degrees;
  std::vector<double> mass{1.0};
  mass.reserve(g.reflection_count() + 1);
  UniformConvolver conv;
  for (auto d : degs) conv.apply(mass, d);
  pmf.mass = std::move(mass);
  return pmf;
}

IntPolynomial eulerian_polynomial(const IrreducibleFactor& f, const Limits& limits) {
  if (f.kind != FactorKind::I2 && f.param > limits.eulerian_factor_rank) {
    throw DomainError("exact Eulerian cap exceeded for " + f.to_string());
  }
  switch (f.kind) {
    case FactorKind::A:
      return IntPolynomial(symmetric_eulerian(f.param + 1));
    case FactorKind::B:
      return IntPolynomial(type_b_eulerian(f.param));
    case FactorKind::D: {
      // D_n(t) = B_n(t) - n 2^(n-1) t A_{n-2}(t), with A_{n-2} the Eulerian
      // polynomial of the symmetric group on n-1 letters.
      const std::uint64_t n = f.param;
      mpz_class c = 0;
      mpz_ui_pow_ui(c.get_mpz_t(), 2, n - 1);
      c *= static_cast<unsigned long>(n);
      const IntPolynomial b(type_b_eulerian(n));
      const IntPolynomial a(symmetric_eulerian(n - 1));
      return b - shift(scale(a, c), 1);
    }
    case FactorKind::I2: {
      mpz_class mid = mpz_class(static_cast<unsigned long>(f.param)) * 2 - 2;
      return IntPolynomial(std::vector<mpz_class>{1, mid, 1});
    }
  }
  throw DomainError("unknown factor kind");
}

IntPolynomial eulerian_polynomial(const GroupDescriptor& g, const Limits& limits) {
  std::vector<IntPolynomial> parts;
  for (const auto& [f, count] : factor_counts(g)) {
    parts.push_back(power(eulerian_polynomial(f, limits), count));
  }
  return product(std::move(parts));
}

std::vector<double> eulerian_normalized(const IrreducibleFactor& f) {
  switch (f.kind) {
    case FactorKind::A:
      return symmetric_eulerian_normalized(f.param + 1);
    case FactorKind::B:
      return type_b_eulerian_normalized(f.param);
    case FactorKind::D: {
      // Divide the type-D identity by |D_n| = 2^(n-1) n!: d(t) = 2 b(t) - t a(t)
      // with b, a the normalized type-B and S_{n-1} distributions.
      const auto b = type_b_eulerian_normalized(f.param);
      const auto a = symmetric_eulerian_normalized(f.param - 1);
      std::vector<double> out(b.size());
      for (std::size_t k = 0; k < b.size(); ++k) {
        double v = 2.0 * b[k];
        if (k >= 1 && k - 1 < a.size()) v -= a[k - 1];
        out[k] = v < DBL_MIN ? 0.0 : v;
      }
      return out;
    }
    case FactorKind::I2: {
      const double m2 = 2.0 * static_cast<double>(f.param);
      return {1.0 / m2, (m2 - 2.0) / m2, 1.0 / m2};
    }
  }
  throw DomainError("unknown factor kind");
}

Pmf eulerian_pmf(const GroupDescriptor& g, const Limits& limits) {
  Pmf pmf;
  pmf.statistic = Statistic::des;
  pmf.group = g;
  if (g.rank() <= limits.eulerian_exact_rank) {
    auto poly = eulerian_polynomial(g, limits);
    pmf.counts = poly.coeffs();
    pmf.mass = normalize_counts(*pmf.counts);
    return pmf;
  }
  std::vector<double> mass{1.0};
  for (const auto& [f, count] : factor_counts(g)) {
    const auto part = eulerian_normalized(f);
    for (std::size_t i = 0; i < count; ++i) mass = convolve(mass, part);
  }
  pmf.mass = std::move(mass);
  return pmf;
}

mpq_class descent_variance_closed_form(const IrreducibleFactor& f) {
  const auto n = static_cast<unsigned long>(f.param);
  mpq_class v;
  switch (f.kind) {
    case FactorKind::A: v = mpq_class(n + 2, 12ul); break;
    case FactorKind::B: v = mpq_class(n + 1, 12ul); break;
    case FactorKind::D: v = n == 2 ? mpq_class(1, 2) : mpq_class(n + 2, 12ul); break;
    case FactorKind::I2: v = mpq_class(1ul, n); break;
  }
  v.canonicalize();
  return v;
}

Pmf statistic_pmf(const GroupDescriptor& g, Statistic stat, const Limits& limits) {
  return stat == Statistic::inv ? mahonian_pmf(g, false, limits) : eulerian_pmf(g, limits);
}

Moments moments_from_counts(const Pmf& pmf) {
  if (!pmf.counts) throw DomainError("exact counts not available");
  mpz_class total = 0, s1 = 0, s2 = 0;
  for (std::size_t k = 0; k < pmf.counts->size(); ++k) {
    const auto& c = (*pmf.counts)[k];
    const auto kk = static_cast<unsigned long>(k);
    total += c;
    s1 += c * kk;
    s2 += c * kk * kk;
  }
  Moments m;
  m.mean = mpq_class(s1, total);
  m.mean.canonicalize();
  mpq_class second(s2, total);
  second.canonicalize();
  m.variance = second - m.mean * m.mean;
  finish(m);
  return m;
}

Moments moments(const GroupDescriptor& g, Statistic stat, const Limits& limits) {
  Moments m;
  if (stat == Statistic::inv) {
    mpz_class s1 = 0, s2 = 0;
    for (auto d : degrees(g).degrees) {
      const mpz_class dz(static_cast<unsigned long>(d));
      s1 += dz - 1;
      s2 += dz * dz - 1;
    }
    m.mean = mpq_class(s1, 2);
    m.variance = mpq_class(s2, 12);
    finish(m);
    return m;
  }

  m.mean = 0;
  m.variance = 0;
  for (const auto& [f, count] : factor_counts(g)) {
    Moments part;
    if (f.kind != FactorKind::I2 && f.param <= limits.root_factor_rank) {
      Pmf single;
      single.counts = eulerian_polynomial(f, limits).coeffs();
      part = moments_from_counts(single);
    } else {
      part.mean = half(f.rank());
      part.variance = descent_variance_closed_form(f);
    }
    if (part.mean != half(f.rank())) {
      throw InvariantViolation("descent mean of " + f.to_string() + " differs from rank/2");
    }
    m.mean += part.mean * static_cast<unsigned long>(count);
    m.variance += part.variance * static_cast<unsigned long>(count);
  }
  finish(m);
  return m;
}

RootList eulerian_roots(const GroupDescriptor& g, double rel_tol, const Limits& limits) {
  RootList out;
  for (const auto& [f, count] : factor_counts(g)) {
    if (f.rank() > limits.root_factor_rank) {
      throw DomainError("root extraction cap exceeded for " + f.to_string() + " (rank " +
                        std::to_string(f.rank()) + " > " +
                        std::to_string(limits.root_factor_rank) + ")");
    }
    const auto roots = isolate_negative_real_roots(eulerian_polynomial(f, limits), rel_tol);
    out.residual = std::max(out.residual, roots.residual);
    for (std::size_t i = 0; i < count; ++i) {
      out.q.insert(out.q.end(), roots.q.begin(), roots.q.end());
    }
    for (const auto& c : roots.clusters) {
      out.clusters.push_back({c.q, c.multiplicity * count});
    }
  }
  std::sort(out.q.begin(), out.q.end());
  std::sort(out.clusters.begin(), out.clusters.end(),
            [](const RootCluster& a, const RootCluster& b) { return a.q < b.q; });
  // Merge clusters shared between different factors.
  std::vector<RootCluster> merged;
  for (const auto& c : out.clusters) {
    if (!merged.empty() && std::abs(merged.back().q - c.q) <= 8 * rel_tol * c.q) {
      merged.back().multiplicity += c.multiplicity;
    } else {
      merged.push_back(c);
    }
  }
  out.clusters = std::move(merged);
  return out;
}

BernoulliParams descent_bernoulli_params(const GroupDescriptor& g, double rel_tol,
                                         const Limits& limits) {
  BernoulliParams out;
  for (double q : eulerian_roots(g, rel_tol, limits).q) out.p.push_back(1.0 / (1.0 + q));
  std::sort(out.p.begin(), out.p.end());
  return out;
}

}  // namespace coxext
