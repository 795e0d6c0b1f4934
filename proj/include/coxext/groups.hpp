#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace coxext {

enum class FactorKind { A, B, D, I2 };

/// One irreducible finite Coxeter group. For A/B/D the parameter is the rank,
/// for I2 it is the order m of the rotation subgroup (the m-gon).
struct IrreducibleFactor {
  FactorKind kind = FactorKind::A;
  std::uint64_t param = 1;

  /// Throws DomainError when the parameter is outside the family's range.
  static IrreducibleFactor make(FactorKind kind, std::uint64_t param);

  std::uint64_t rank() const noexcept { return kind == FactorKind::I2 ? 2 : param; }
  /// Sorted degree list of this factor.
  std::vector<std::uint64_t> degrees() const;
  std::string to_string() const;

  friend bool operator==(const IrreducibleFactor&, const IrreducibleFactor&) = default;
  friend auto operator<=>(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

struct DegreeMultiset {
  std::vector<std::uint64_t> degrees;  // sorted ascending, each >= 2
};

/// A finite Coxeter group written as an ordered product of irreducibles.
class GroupDescriptor {
 public:
  GroupDescriptor() = default;
  explicit GroupDescriptor(std::vector<IrreducibleFactor> factors);

  const std::vector<IrreducibleFactor>& factors() const noexcept { return factors_; }
  std::uint64_t rank() const noexcept { return rank_; }
  std::uint64_t reflection_count() const noexcept { return reflection_count_; }
  bool empty() const noexcept { return factors_.empty(); }

  /// Canonical text form, parseable by parse_descriptor ("B2 x I2(5) x I2(5)").
  std::string to_string() const;

  friend bool operator==(const GroupDescriptor& a, const GroupDescriptor& b) {
    return a.factors_ == b.factors_;
  }

 private:
  std::vector<IrreducibleFactor> factors_;
  std::uint64_t rank_ = 0;
  std::uint64_t reflection_count_ = 0;
};

struct GroupSummary {
  std::uint64_t rank = 0;
  std::uint64_t reflection_count = 0;
  mpz_class order;
  double log_order = 0.0;
};

/// Grammar (whitespace ignored):
///   expr   := term (("x" | "*") term)*
///   term   := factor ("^" int)?
///   factor := ("A" | "B" | "D") int | "I2(" int ")"
GroupDescriptor parse_descriptor(std::string_view text);

DegreeMultiset degrees(const GroupDescriptor& g);
GroupSummary group_summary(const GroupDescriptor& g);

}  // namespace coxext
