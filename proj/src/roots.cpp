#include "coxext/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "coxext/errors.hpp"

namespace coxext {

namespace {

// ---------------------------------------------------------------------------
// Rational polynomial helpers for the squarefree split.

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.emplace_back(0);
}

bool is_constant(const QPoly& p) { return p.size() == 1; }

QPoly to_q(const IntPolynomial& p) {
  QPoly out;
  for (const auto& c : p.coeffs()) out.emplace_back(c);
  return out;
}

QPoly derivative(const QPoly& p) {
  if (p.size() == 1) return {mpq_class(0)};
  QPoly d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<unsigned long>(k);
  trim(d);
  return d;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

void make_monic(QPoly& p) {
  const mpq_class lead = p.back();
  if (lead == 0) return;
  for (auto& c : p) c /= lead;
}

// Returns the quotient; `a` becomes the remainder.
QPoly divmod(QPoly& a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {mpq_class(0)};
  const std::size_t db = b.size() - 1;
  QPoly quot(a.size() - db, mpq_class(0));
  for (std::size_t i = a.size() - 1;; --i) {
    const mpq_class f = a[i] / b.back();
    quot[i - db] = f;
    if (f != 0) {
      for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= f * b[j];
    }
    if (i == db) break;
  }
  a.resize(db == 0 ? 1 : db);
  trim(a);
  trim(quot);
  return quot;
}

QPoly exact_div(QPoly a, const QPoly& b) { return divmod(a, b); }

QPoly gcd(QPoly a, QPoly b) {
  trim(a);
  trim(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    QPoly r = a;
    divmod(r, b);
    a = std::move(b);
    b = std::move(r);
  }
  make_monic(a);
  return a;
}

IntPolynomial to_primitive(const QPoly& p) {
  mpz_class den = 1;
  for (const auto& c : p) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<mpz_class> out;
  mpz_class content = 0;
  for (const auto& c : p) {
    mpz_class v = c.get_num() * (den / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(v);
  }
  if (content != 0 && content != 1) {
    for (auto& v : out) v /= content;
  }
  if (!out.empty() && out.back() < 0) {
    for (auto& v : out) v = -v;
  }
  return IntPolynomial(std::move(out));
}

// ---------------------------------------------------------------------------
// Modular squarefree certificate: deg gcd(p mod P, p' mod P) >= deg gcd over Q
// whenever P does not divide the leading coefficient.

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> reduce_mod(const IntPolynomial& p, u64 m) {
  std::vector<u64> out;
  for (const auto& c : p.coeffs()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), m);
    out.push_back(r.get_ui());
  }
  while (out.size() > 1 && out.back() == 0) out.pop_back();
  return out;
}

std::size_t gcd_degree_mod(std::vector<u64> a, std::vector<u64> b, u64 m) {
  auto strip = [](std::vector<u64>& v) {
    while (v.size() > 1 && v.back() == 0) v.pop_back();
  };
  strip(a);
  strip(b);
  while (!(b.size() == 1 && b[0] == 0)) {
    // a <- a mod b
    const u64 inv = powmod(b.back(), m - 2, m);
    while (a.size() >= b.size() && !(a.size() == 1 && a[0] == 0)) {
      const u64 f = mulmod(a.back(), inv, m);
      const std::size_t off = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[off + j] = (a[off + j] + m - mulmod(f, b[j], m)) % m;
      }
      a.pop_back();
      if (a.empty()) a.push_back(0);
      strip(a);
      if (a.size() < b.size()) break;
    }
    std::swap(a, b);
  }
  return a.size() - 1;
}

bool certified_squarefree(const IntPolynomial& p) {
  static constexpr u64 kPrimes[] = {2305843009213693951ULL, 4611686018427387847ULL,
                                    1000000007ULL};
  const IntPolynomial d = p.derivative();
  for (u64 m : kPrimes) {
    auto pm = reduce_mod(p, m);
    if (pm.size() - 1 != p.degree()) continue;  // prime divides the leading coefficient
    auto dm = reduce_mod(d, m);
    if (gcd_degree_mod(pm, dm, m) == 0) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Exact evaluation at dyadic points.

struct Dyadic {
  mpz_class a;  // q = a * 2^-e
  unsigned long e = 0;
};

Dyadic to_dyadic(double q) {
  int ex = 0;
  const double mant = std::frexp(q, &ex);
  Dyadic d;
  const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
  d.a = mpz_class(static_cast<long>(scaled));
  const long shift = 53 - ex;
  if (shift >= 0) {
    d.e = static_cast<unsigned long>(shift);
  } else {
    mpz_mul_2exp(d.a.get_mpz_t(), d.a.get_mpz_t(), static_cast<unsigned long>(-shift));
    d.e = 0;
  }
  return d;
}

// Returns 2^(e*deg) * p(-q), exactly. With `absolute` the coefficients are
// combined as sum |c_k| q^k instead.
mpz_class scaled_value(const std::vector<mpz_class>& c, const Dyadic& q, bool absolute = false) {
  const std::size_t m = c.size() - 1;
  mpz_class acc = absolute ? mpz_class(abs(c[m])) : c[m];
  mpz_class term;
  const mpz_class mult = absolute ? q.a : mpz_class(-q.a);
  for (std::size_t k = m; k-- > 0;) {
    acc *= mult;
    term = absolute ? mpz_class(abs(c[k])) : c[k];
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), q.e * (m - k));
    acc += term;
  }
  return acc;
}

double ratio_as_double(const mpz_class& num, const mpz_class& den, long extra_exp) {
  if (num == 0) return 0.0;
  long e1 = 0, e2 = 0;
  const double d1 = mpz_get_d_2exp(&e1, num.get_mpz_t());
  const double d2 = mpz_get_d_2exp(&e2, den.get_mpz_t());
  return std::ldexp(d1 / d2, static_cast<int>(e1 - e2 + extra_exp));
}

int sign_of(const mpz_class& v) {
  const int s = mpz_sgn(v.get_mpz_t());
  return s > 0 ? 1 : (s < 0 ? -1 : 0);
}

struct Evaluator {
  explicit Evaluator(const IntPolynomial& p) : coeffs(p.coeffs()), deriv(p.derivative().coeffs()) {}

  int sign(double q) const { return sign_of(scaled_value(coeffs, to_dyadic(q))); }

  // Newton correction dq such that q + dq is the Newton iterate for g(q) = p(-q).
  double newton_step(double q) const {
    const Dyadic d = to_dyadic(q);
    const mpz_class v = scaled_value(coeffs, d);
    const mpz_class dv = scaled_value(deriv, d);
    if (dv == 0) return std::numeric_limits<double>::quiet_NaN();
    // g(q) = p(-q), so q - g/g' = q + p(-q)/p'(-q);
    // v = 2^(e m) p(-q) and dv = 2^(e(m-1)) p'(-q).
    return ratio_as_double(v, dv, -static_cast<long>(d.e));
  }

  std::vector<mpz_class> coeffs;
  std::vector<mpz_class> deriv;
};

double refine(const Evaluator& ev, double lo, double hi, int sign_lo, double rel_tol) {
  double x = std::sqrt(lo * hi);
  bool use_newton = true;
  for (int iter = 0; iter < 400; ++iter) {
    if (hi / lo - 1.0 <= rel_tol) return std::sqrt(lo * hi);
    double cand = std::numeric_limits<double>::quiet_NaN();
    if (use_newton) cand = x + ev.newton_step(x);
    const double width_before = hi / lo;
    if (!(cand > lo && cand < hi)) cand = std::sqrt(lo * hi);
    const int s = ev.sign(cand);
    if (s == 0) return cand;
    if (s == sign_lo) lo = cand; else hi = cand;
    x = cand;
    // Probe just past the iterate to close the bracket once Newton has settled.
    const double probe = s == sign_lo ? cand * (1.0 + rel_tol / 4) : cand * (1.0 - rel_tol / 4);
    if (probe > lo && probe < hi) {
      const int sp = ev.sign(probe);
      if (sp == 0) return probe;
      if (sp == sign_lo) lo = probe; else hi = probe;
    }
    // Fall back to bisection while Newton fails to halve the log-width.
    use_newton = std::log(hi / lo) <= 0.5 * std::log(width_before);
  }
  throw NumericalError("root refinement did not converge");
}

std::vector<double> roots_of_squarefree(const IntPolynomial& f, double rel_tol) {
  const std::size_t m = f.degree();
  const auto& c = f.coeffs();
  if (m == 0) return {};
  if (m == 1) return {ratio_as_double(c[0], c[1], 0)};

  // Vieta: min q >= c0/c1 and max q <= c_{m-1}/c_m since all q > 0.
  const double lo = 0.5 * ratio_as_double(c[0], c[1], 0);
  const double hi = 2.0 * ratio_as_double(c[m - 1], c[m], 0);
  if (!(lo > 0) || !std::isfinite(hi) || !(hi > lo)) {
    throw NumericalError("root bounds out of floating-point range");
  }
  const Evaluator ev(f);
  const double span = std::log(hi / lo);

  std::size_t grid = std::max<std::size_t>(64, 16 * m);
  const std::size_t budget = std::max<std::size_t>(1u << 16, 512 * m);
  std::vector<int> signs;
  std::vector<double> pts;
  for (;;) {
    std::vector<double> new_pts(grid + 1);
    std::vector<int> new_signs(grid + 1);
    for (std::size_t j = 0; j <= grid; ++j) {
      new_pts[j] = j == 0 ? lo : j == grid ? hi : lo * std::exp(span * static_cast<double>(j) / grid);
      // Reuse previous evaluations at even indices after a doubling.
      if (!signs.empty() && j % 2 == 0) {
        new_signs[j] = signs[j / 2];
        new_pts[j] = pts[j / 2];
      } else {
        new_signs[j] = ev.sign(new_pts[j]);
      }
    }
    pts = std::move(new_pts);
    signs = std::move(new_signs);

    std::vector<double> found;
    std::vector<std::pair<std::size_t, std::size_t>> brackets;
    std::size_t last = 0;
    for (std::size_t j = 0; j <= grid; ++j) {
      if (signs[j] == 0) {
        found.push_back(pts[j]);
        continue;
      }
      if (j > 0 && signs[last] != 0 && signs[last] != signs[j] && last == j - 1) {
        brackets.emplace_back(last, j);
      }
      last = j;
    }
    if (found.size() + brackets.size() == m) {
      for (auto [a, b] : brackets) found.push_back(refine(ev, pts[a], pts[b], signs[a], rel_tol));
      std::sort(found.begin(), found.end());
      return found;
    }
    if (found.size() + brackets.size() > m) {
      throw NumericalError("more sign changes than the degree allows");
    }
    if (grid * 2 > budget) {
      const std::size_t missing = m - found.size() - brackets.size();
      std::ostringstream os;
      if (span / static_cast<double>(grid) < rel_tol) {
        os << "multiplicity collision: cluster of " << missing
           << " roots closer than the requested tolerance";
      } else {
        os << "root isolation did not converge: " << missing << " of " << m
           << " roots not bracketed (polynomial may not be real-rooted)";
      }
      throw NumericalError(os.str());
    }
    grid *= 2;
  }
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const IntPolynomial& p) {
  if (p.degree() == 0) return {};
  if (certified_squarefree(p)) {
    return {{to_primitive(to_q(p)), 1}};
  }
  std::vector<SquarefreeFactor> out;
  const QPoly f = to_q(p);
  const QPoly fp = derivative(f);
  const QPoly a0 = gcd(f, fp);
  QPoly b = exact_div(f, a0);
  QPoly c = exact_div(fp, a0);
  QPoly d = sub(c, derivative(b));
  for (std::size_t i = 1; !is_constant(b); ++i) {
    QPoly a = gcd(b, d);
    if (!is_constant(a)) out.push_back({to_primitive(a), i});
    b = exact_div(b, a);
    c = exact_div(d, a);
    d = sub(c, derivative(b));
  }
  return out;
}

int sign_at_negative(const IntPolynomial& p, double q) {
  return Evaluator(p).sign(q);
}

RootList isolate_negative_real_roots(const IntPolynomial& p, double rel_tol) {
  if (!(rel_tol > 0) || rel_tol >= 1) throw DomainError("rel_tol must lie in (0, 1)");
  for (const auto& c : p.coeffs()) {
    if (c <= 0) throw DomainError("root isolation needs strictly positive coefficients");
  }

  std::vector<double> all;
  for (const auto& sf : squarefree_decomposition(p)) {
    const auto r = roots_of_squarefree(sf.poly, rel_tol);
    for (std::size_t k = 0; k < sf.multiplicity; ++k) all.insert(all.end(), r.begin(), r.end());
  }
  std::sort(all.begin(), all.end());
  if (all.size() != p.degree()) {
    throw NumericalError("found " + std::to_string(all.size()) + " roots for degree " +
                         std::to_string(p.degree()));
  }

  RootList out;
  out.q = all;
  for (double q : all) {
    if (!out.clusters.empty() &&
        std::abs(q - out.clusters.back().q) <= 8 * rel_tol * std::max(q, out.clusters.back().q)) {
      ++out.clusters.back().multiplicity;
    } else {
      out.clusters.push_back({q, 1});
    }
  }
  for (const auto& cl : out.clusters) {
    const Dyadic d = to_dyadic(cl.q);
    const mpz_class v = scaled_value(p.coeffs(), d);
    const mpz_class s = scaled_value(p.coeffs(), d, true);
    out.residual = std::max(out.residual, std::abs(ratio_as_double(v, s, 0)));
  }
  return out;
}

}  // namespace coxext
