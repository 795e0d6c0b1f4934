#include <doctest.h>

#include "coxext/polynomial.hpp"
#include "coxext/random.hpp"

using namespace coxext;

TEST_CASE("multiply small polynomials") {
  CHECK(multiply({1, 1}, {1, 1, 1}) == IntPolynomial({1, 2, 2, 1}));
  CHECK(multiply({1, 1}, {1, 1}) == IntPolynomial({1, 2, 1}));
  const IntPolynomial p{3, 0, -2, 5};
  CHECK(p * IntPolynomial::one() == p);
  CHECK((p * IntPolynomial{0}).is_zero());
}

TEST_CASE("trailing zeros are trimmed") {
  const IntPolynomial p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(IntPolynomial{0, 0}.is_zero());
}

TEST_CASE("geometric and multiply_geometric") {
  CHECK(IntPolynomial::geometric(4) == IntPolynomial({1, 1, 1, 1}));
  const IntPolynomial p{2, 0, 7, 1};
  CHECK(multiply_geometric(p, 5) == p * IntPolynomial::geometric(5));
  CHECK(multiply_geometric(p, 1) == p);
}

TEST_CASE("algebraic laws on random inputs") {
  RandomStream rng(7);
  auto random_poly = [&] {
    std::vector<mpz_class> c(1 + rng.below(6));
    for (auto& v : c) v = static_cast<long>(rng.below(21)) - 10;
    return IntPolynomial(c);
  };
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a * b).sum() == a.sum() * b.sum());
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("product, power and palindromes") {
  std::vector<IntPolynomial> fs;
  for (std::uint64_t d = 2; d <= 5; ++d) fs.push_back(IntPolynomial::geometric(d));
  const auto prod = product(fs);
  CHECK(prod.sum() == 120);
  CHECK(prod.is_palindromic());
  CHECK(power({1, 1}, 4) == IntPolynomial({1, 4, 6, 4, 1}));
  CHECK_FALSE(IntPolynomial({1, 2}).is_palindromic());
}

TEST_CASE("evaluate, derivative, shift, scale") {
  const IntPolynomial p{1, 4, 1};
  CHECK(p.evaluate(2) == 13);
  CHECK(p.derivative() == IntPolynomial({4, 2}));
  CHECK(shift(p, 2) == IntPolynomial({0, 0, 1, 4, 1}));
  CHECK(scale(p, 3) == IntPolynomial({3, 12, 3}));
  CHECK(p.to_string().find("4") != std::string::npos);
}
