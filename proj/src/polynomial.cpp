#include "coxext/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "coxext/errors.hpp"

namespace coxext {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::geometric(std::uint64_t d) {
  if (d < 1) throw DomainError("geometric polynomial needs d >= 1");
  return IntPolynomial(std::vector<mpz_class>(d, mpz_class(1)));
}

void IntPolynomial::trim() {
  while (coeffs_.size() > 1 && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

mpz_class IntPolynomial::sum() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

mpz_class IntPolynomial::evaluate(const mpz_class& z) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() == 1) return IntPolynomial();
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<unsigned long>(k);
  return IntPolynomial(std::move(d));
}

bool IntPolynomial::is_palindromic() const {
  const std::size_t n = coeffs_.size();
  for (std::size_t k = 0; k < n / 2; ++k) {
    if (coeffs_[k] != coeffs_[n - 1 - k]) return false;
  }
  return true;
}

std::string IntPolynomial::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (k) os << ", ";
    os << coeffs_[k].get_str();
  }
  os << ']';
  return os.str();
}

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& r) {
  const auto& a = p.coeffs();
  const auto& b = r.coeffs();
  std::vector<mpz_class> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& r) { return multiply(p, r); }

IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& r) {
  std::vector<mpz_class> out(std::max(p.coeffs().size(), r.coeffs().size()));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k] += p[k];
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) out[k] += r[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& r) {
  std::vector<mpz_class> out(std::max(p.coeffs().size(), r.coeffs().size()));
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) out[k] += p[k];
  for (std::size_t k = 0; k < r.coeffs().size(); ++k) out[k] -= r[k];
  return IntPolynomial(std::move(out));
}

IntPolynomial scale(const IntPolynomial& p, const mpz_class& c) {
  std::vector<mpz_class> out(p.coeffs());
  for (auto& x : out) x *= c;
  return IntPolynomial(std::move(out));
}

IntPolynomial shift(const IntPolynomial& p, std::size_t k) {
  if (p.is_zero()) return p;
  std::vector<mpz_class> out(k, mpz_class(0));
  out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
  return IntPolynomial(std::move(out));
}

IntPolynomial power(const IntPolynomial& p, std::uint64_t e) {
  IntPolynomial result = IntPolynomial::one();
  IntPolynomial base = p;
  while (e) {
    if (e & 1) result = multiply(result, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return result;
}

IntPolynomial multiply_geometric(const IntPolynomial& p, std::uint64_t d) {
  if (d < 1) throw DomainError("geometric factor needs d >= 1");
  const auto& a = p.coeffs();
  const std::size_t n = a.size();
  std::vector<mpz_class> out(n + d - 1);
  mpz_class window = 0;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < n) window += a[k];
    if (k >= d && k - d < n) window -= a[k - d];
    out[k] = window;
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial product(std::vector<IntPolynomial> factors) {
  if (factors.empty()) return IntPolynomial::one();
  while (factors.size() > 1) {
    std::vector<IntPolynomial> next;
    next.reserve((factors.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < factors.size(); i += 2) {
      next.push_back(multiply(factors[i], factors[i + 1]));
    }
    if (factors.size() % 2) next.push_back(std::move(factors.back()));
    factors = std::move(next);
  }
  return std::move(factors.front());
}

}  // namespace coxext
