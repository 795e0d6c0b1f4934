#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coxext/groups.hpp"
#include "coxext/pmf.hpp"

namespace coxext {

/// Brute-force enumeration of a group by breadth-first search over right
/// multiplication by the simple generators, starting at the identity.
///
/// Element models, per factor:
///   A(n)  permutation window of n+1 letters; s_i swaps positions i, i+1
///   B(n)  signed window; s_0 negates position 0, s_i swaps i-1, i
///   D(n)  even-signed window; s_0 maps (w0, w1) to (-w1, -w0), s_i swaps i-1, i
///   I2(m) (rotation r, reflected flag); s flips the flag, t moves r by one
struct OracleTable {
  GroupDescriptor group;
  std::size_t generator_count = 0;
  std::vector<std::int32_t> states;  // flattened, state_width entries per element
  std::size_t state_width = 0;
  std::vector<std::uint32_t> length;    // BFS depth = word length = inversion count
  std::vector<std::uint32_t> descents;  // generators s with l(ws) < l(w)

  std::size_t size() const noexcept { return length.size(); }
  /// Per-factor mixed-radix integers joined with ':'.
  std::string key(std::size_t element) const;
  std::vector<mpz_class> length_histogram() const;
  std::vector<mpz_class> descent_histogram() const;
};

/// Throws DomainError when the group order exceeds cap and
/// InvariantViolation when the Cayley graph is inconsistent (a neighbour not
/// exactly one level away, a non-unique longest element, a non-palindromic
/// length histogram, ...).
OracleTable enumerate(const GroupDescriptor& g, std::uint64_t cap = 1'000'000);

Pmf oracle_pmf(const GroupDescriptor& g, Statistic stat, std::uint64_t cap = 1'000'000);
Pmf oracle_pmf(const OracleTable& table, Statistic stat);

struct OracleComparison {
  GroupDescriptor group;
  std::vector<mpz_class> oracle_inv, analytic_inv;
  std::vector<mpz_class> oracle_des, analytic_des;
  mpz_class element_count, degree_product;
  std::uint64_t max_length = 0, reflection_count = 0;

  bool inv_match() const { return oracle_inv == analytic_inv; }
  bool des_match() const { return oracle_des == analytic_des; }
  bool order_match() const { return element_count == degree_product; }
  bool length_match() const { return max_length == reflection_count; }
  bool all_match() const { return inv_match() && des_match() && order_match() && length_match(); }
};

OracleComparison compare_with_oracle(const GroupDescriptor& g, std::uint64_t cap = 1'000'000);

}  // namespace coxext
