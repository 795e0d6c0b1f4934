#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coxext {

/// Polynomial with arbitrary-precision integer coefficients, ascending by
/// exponent. The zero polynomial is stored as the single coefficient 0;
/// otherwise the leading coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() : coeffs_{0} {}
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  static IntPolynomial one() { return IntPolynomial({1}); }
  /// 1 + z + ... + z^(d-1)
  static IntPolynomial geometric(std::uint64_t d);

  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  const mpz_class& operator[](std::size_t k) const { return coeffs_[k]; }
  const mpz_class& leading() const { return coeffs_.back(); }

  /// Value at z = 1, i.e. the sum of coefficients.
  mpz_class sum() const;
  mpz_class evaluate(const mpz_class& z) const;
  IntPolynomial derivative() const;
  bool is_palindromic() const;

  std::string to_string() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<mpz_class> coeffs_;
};

IntPolynomial multiply(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial operator*(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& r);
IntPolynomial scale(const IntPolynomial& p, const mpz_class& c);
/// p * z^k
IntPolynomial shift(const IntPolynomial& p, std::size_t k);
IntPolynomial power(const IntPolynomial& p, std::uint64_t e);

/// p * (1 + z + ... + z^(d-1)) in O(deg p + d) with a running window sum.
IntPolynomial multiply_geometric(const IntPolynomial& p, std::uint64_t d);

/// Product of many polynomials, multiplied in a balanced tree.
IntPolynomial product(std::vector<IntPolynomial> factors);

}  // namespace coxext
