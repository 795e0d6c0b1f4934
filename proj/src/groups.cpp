#include "coxext/groups.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "coxext/errors.hpp"

namespace coxext {

namespace {

// Degree lists are materialized, so classical ranks need a sane ceiling.
constexpr std::uint64_t kMaxClassicalRank = 100'000'000;

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw DomainError("group too large: reflection count overflows 64 bits");
  }
  return a + b;
}

char kind_letter(FactorKind k) {
  switch (k) {
    case FactorKind::A: return 'A';
    case FactorKind::B: return 'B';
    case FactorKind::D: return 'D';
    case FactorKind::I2: return 'I';
  }
  return '?';
}

class DescriptorParser {
 public:
  explicit DescriptorParser(std::string_view text) : text_(text) {}

  GroupDescriptor parse() {
    std::vector<IrreducibleFactor> factors;
    skip_ws();
    if (at_end()) throw ParseError("empty group descriptor", pos_);
    for (;;) {
      parse_term(factors);
      skip_ws();
      if (at_end()) break;
      const char c = text_[pos_];
      if (c != 'x' && c != '*') {
        throw ParseError(std::string("expected 'x' or '*' but found '") + c + "'", pos_);
      }
      ++pos_;
      skip_ws();
      if (at_end()) throw ParseError("expected a factor after product symbol", pos_);
    }
    return GroupDescriptor(std::move(factors));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c) {
      throw ParseError(std::string("expected '") + c + "'", pos_);
    }
    ++pos_;
  }

  std::uint64_t parse_int() {
    skip_ws();
    const std::size_t start = pos_;
    if (at_end() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      throw ParseError("expected an integer", pos_);
    }
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
        throw ParseError("integer overflow", start);
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  void parse_term(std::vector<IrreducibleFactor>& out) {
    skip_ws();
    const std::size_t start = pos_;
    const char c = text_[pos_];
    FactorKind kind;
    std::uint64_t param = 0;
    if (c == 'A' || c == 'B' || c == 'D') {
      kind = c == 'A' ? FactorKind::A : c == 'B' ? FactorKind::B : FactorKind::D;
      ++pos_;
      param = parse_int();
    } else if (c == 'I') {
      ++pos_;
      expect('2');
      expect('(');
      kind = FactorKind::I2;
      param = parse_int();
      expect(')');
    } else {
      throw ParseError(std::string("unknown factor type '") + c + "'", pos_);
    }

    IrreducibleFactor factor;
    try {
      factor = IrreducibleFactor::make(kind, param);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), start);
    }

    std::uint64_t power = 1;
    skip_ws();
    if (!at_end() && text_[pos_] == '^') {
      ++pos_;
      const std::size_t power_pos = pos_;
      power = parse_int();
      if (power == 0) throw ParseError("exponent must be at least 1", power_pos);
      if (power > kMaxClassicalRank) throw ParseError("exponent too large", power_pos);
    }
    out.insert(out.end(), power, factor);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

IrreducibleFactor IrreducibleFactor::make(FactorKind kind, std::uint64_t param) {
  std::uint64_t minimum = 1;
  switch (kind) {
    case FactorKind::A: minimum = 1; break;
    case FactorKind::B: minimum = 2; break;
    case FactorKind::D: minimum = 2; break;
    case FactorKind::I2: minimum = 3; break;
  }
  IrreducibleFactor f{kind, param};
  if (param < minimum) {
    throw DomainError("parameter out of range for " + f.to_string() + ": requires >= " +
                      std::to_string(minimum));
  }
  if (kind != FactorKind::I2 && param > kMaxClassicalRank) {
    throw DomainError("rank of " + f.to_string() + " exceeds supported maximum");
  }
  return f;
}

std::vector<std::uint64_t> IrreducibleFactor::degrees() const {
  std::vector<std::uint64_t> d;
  switch (kind) {
    case FactorKind::A:
      for (std::uint64_t i = 2; i <= param + 1; ++i) d.push_back(i);
      break;
    case FactorKind::B:
      for (std::uint64_t i = 1; i <= param; ++i) d.push_back(2 * i);
      break;
    case FactorKind::D:
      for (std::uint64_t i = 1; i < param; ++i) d.push_back(2 * i);
      d.push_back(param);
      break;
    case FactorKind::I2:
      d = {2, param};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::string IrreducibleFactor::to_string() const {
  if (kind == FactorKind::I2) return "I2(" + std::to_string(param) + ")";
  return std::string(1, kind_letter(kind)) + std::to_string(param);
}

GroupDescriptor::GroupDescriptor(std::vector<IrreducibleFactor> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("group descriptor needs at least one factor");
  for (const auto& f : factors_) {
    rank_ = checked_add(rank_, f.rank());
    // Sum of (d - 1) over degrees, in closed form per family.
    std::uint64_t refl = 0;
    const std::uint64_t n = f.param;
    switch (f.kind) {
      case FactorKind::A: refl = n % 2 == 0 ? (n / 2) * (n + 1) : n * ((n + 1) / 2); break;
      case FactorKind::B: refl = n * n; break;
      case FactorKind::D: refl = n * (n - 1); break;
      case FactorKind::I2: refl = n; break;
    }
    reflection_count_ = checked_add(reflection_count_, refl);
  }
}

std::string GroupDescriptor::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " x ";
    out += factors_[i].to_string();
  }
  return out;
}

GroupDescriptor parse_descriptor(std::string_view text) { return DescriptorParser(text).parse(); }

DegreeMultiset degrees(const GroupDescriptor& g) {
  DegreeMultiset out;
  out.degrees.reserve(g.rank());
  for (const auto& f : g.factors()) {
    const auto d = f.degrees();
    out.degrees.insert(out.degrees.end(), d.begin(), d.end());
  }
  std::sort(out.degrees.begin(), out.degrees.end());
  return out;
}

GroupSummary group_summary(const GroupDescriptor& g) {
  GroupSummary s;
  s.rank = g.rank();
  s.reflection_count = g.reflection_count();
  s.order = 1;
  // Multiply small degrees in a balanced tree so ranks in the 10^4 range stay fast.
  std::vector<mpz_class> level;
  for (auto d : degrees(g).degrees) {
    level.emplace_back(static_cast<unsigned long>(d));
    s.log_order += std::log(static_cast<double>(d));
  }
  while (level.size() > 1) {
    std::vector<mpz_class> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
    if (level.size() % 2) next.push_back(level.back());
    level = std::move(next);
  }
  if (!level.empty()) s.order = level.front();
  return s;
}

}  // namespace coxext
