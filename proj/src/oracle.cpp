#include "coxext/oracle.hpp"

#include <algorithm>
#include <deque>
#include <string_view>
#include <unordered_map>

#include "coxext/errors.hpp"
#include "coxext/statistics.hpp"

namespace coxext {

namespace {

struct Generator {
  std::size_t offset;  // start of the factor's slice in the flat state
  FactorKind kind;
  std::size_t index;   // which generator of the factor
  std::int32_t m = 0;  // I2 only
};

std::size_t width_of(const IrreducibleFactor& f) {
  switch (f.kind) {
    case FactorKind::A: return f.param + 1;
    case FactorKind::B:
    case FactorKind::D: return f.param;
    case FactorKind::I2: return 2;
  }
  return 0;
}

void apply(const Generator& gen, std::int32_t* s) {
  std::int32_t* w = s + gen.offset;
  switch (gen.kind) {
    case FactorKind::A:
      std::swap(w[gen.index], w[gen.index + 1]);
      return;
    case FactorKind::B:
      if (gen.index == 0) {
        w[0] = static_cast<std::int32_t>(-w[0]);
      } else {
        std::swap(w[gen.index - 1], w[gen.index]);
      }
      return;
    case FactorKind::D:
      if (gen.index == 0) {
        const std::int32_t a = w[0];
        w[0] = static_cast<std::int32_t>(-w[1]);
        w[1] = static_cast<std::int32_t>(-a);
      } else {
        std::swap(w[gen.index - 1], w[gen.index]);
      }
      return;
    case FactorKind::I2:
      // w = rho^r sigma^f.  w sigma flips f; w (rho sigma) = rho^(r+1) sigma
      // when f = 0 and rho^(r-1) when f = 1.
      if (gen.index == 0) {
        w[1] = static_cast<std::int32_t>(1 - w[1]);
      } else if (w[1] == 0) {
        w[0] = static_cast<std::int32_t>((w[0] + 1) % gen.m);
        w[1] = 1;
      } else {
        w[0] = static_cast<std::int32_t>((w[0] + gen.m - 1) % gen.m);
        w[1] = 0;
      }
      return;
  }
}

std::vector<mpz_class> histogram(const std::vector<std::uint32_t>& values) {
  std::uint32_t top = 0;
  for (auto v : values) top = std::max(top, v);
  std::vector<mpz_class> h(values.empty() ? 1 : top + 1, 0);
  for (auto v : values) h[v] += 1;
  return h;
}

}  // namespace

std::string OracleTable::key(std::size_t element) const {
  std::string out;
  const std::int32_t* s = states.data() + element * state_width;
  for (const auto& f : group.factors()) {
    const std::size_t w = width_of(f);
    std::uint64_t code = 0, radix = 1;
    for (std::size_t j = 0; j < w; ++j) {
      std::uint64_t digit = 0, base = 0;
      switch (f.kind) {
        case FactorKind::A: digit = static_cast<std::uint64_t>(s[j]); base = f.param + 1; break;
        case FactorKind::B:
        case FactorKind::D:
          digit = static_cast<std::uint64_t>(s[j] + static_cast<std::int64_t>(f.param));
          base = 2 * f.param + 1;
          break;
        case FactorKind::I2: digit = static_cast<std::uint64_t>(s[j]); base = j == 0 ? f.param : 2; break;
      }
      code += digit * radix;
      radix *= base;
    }
    if (!out.empty()) out += ':';
    out += std::to_string(code);
    s += w;
  }
  return out;
}

std::vector<mpz_class> OracleTable::length_histogram() const { return histogram(length); }
std::vector<mpz_class> OracleTable::descent_histogram() const { return histogram(descents); }

OracleTable enumerate(const GroupDescriptor& g, std::uint64_t cap) {
  if (g.empty()) throw DomainError("empty group descriptor");
  const mpz_class order = group_summary(g).order;
  if (order > mpz_class(std::to_string(cap))) {
    throw DomainError("group " + g.to_string() + " has order " + order.get_str() +
                      ", above the enumeration cap " + std::to_string(cap));
  }

  OracleTable t;
  t.group = g;
  std::vector<Generator> gens;
  std::vector<std::int32_t> identity;
  for (const auto& f : g.factors()) {
    const std::size_t off = identity.size();
    const std::size_t w = width_of(f);
    switch (f.kind) {
      case FactorKind::A:
        for (std::size_t j = 0; j < w; ++j) identity.push_back(static_cast<std::int32_t>(j));
        for (std::size_t i = 0; i < f.param; ++i) gens.push_back({off, f.kind, i});
        break;
      case FactorKind::B:
      case FactorKind::D:
        for (std::size_t j = 0; j < w; ++j) identity.push_back(static_cast<std::int32_t>(j + 1));
        for (std::size_t i = 0; i < f.param; ++i) gens.push_back({off, f.kind, i});
        break;
      case FactorKind::I2:
        identity.push_back(0);
        identity.push_back(0);
        gens.push_back({off, f.kind, 0, static_cast<std::int32_t>(f.param)});
        gens.push_back({off, f.kind, 1, static_cast<std::int32_t>(f.param)});
        break;
    }
  }
  t.state_width = identity.size();
  t.generator_count = gens.size();
  const std::size_t expected = order.get_ui();
  const std::size_t bytes = t.state_width * sizeof(std::int32_t);

  auto view = [&](std::size_t i) {
    return std::string_view(reinterpret_cast<const char*>(t.states.data() + i * t.state_width), bytes);
  };
  std::unordered_map<std::string, std::uint32_t> index;
  index.reserve(expected * 2);
  t.states.reserve(expected * t.state_width);
  t.states.insert(t.states.end(), identity.begin(), identity.end());
  t.length.push_back(0);
  index.emplace(std::string(view(0)), 0);

  std::vector<std::uint32_t> neighbours;  // generator_count entries per element
  neighbours.reserve(expected * gens.size());
  std::vector<std::int32_t> scratch(t.state_width);
  for (std::size_t head = 0; head < t.length.size(); ++head) {
    for (const auto& gen : gens) {
      std::copy_n(t.states.begin() + static_cast<std::ptrdiff_t>(head * t.state_width),
                  t.state_width, scratch.begin());
      apply(gen, scratch.data());
      std::string k(reinterpret_cast<const char*>(scratch.data()), bytes);
      auto [it, inserted] = index.try_emplace(std::move(k), static_cast<std::uint32_t>(t.length.size()));
      if (inserted) {
        if (t.length.size() >= expected) {
          throw InvariantViolation("enumeration of " + g.to_string() + " exceeds the group order");
        }
        t.states.insert(t.states.end(), scratch.begin(), scratch.end());
        t.length.push_back(t.length[head] + 1);
      }
      neighbours.push_back(it->second);
    }
  }
  if (t.size() != expected) {
    throw InvariantViolation("enumeration of " + g.to_string() + " found " +
                             std::to_string(t.size()) + " elements, expected " + order.get_str());
  }

  t.descents.assign(t.size(), 0);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const auto other = t.length[neighbours[i * gens.size() + j]];
      if (other + 1 == t.length[i]) {
        ++t.descents[i];
      } else if (other != t.length[i] + 1) {
        throw InvariantViolation("Cayley graph of " + g.to_string() +
                                 " has neighbours not one level apart");
      }
    }
  }

  const auto hist = t.length_histogram();
  if (!std::equal(hist.begin(), hist.end(), hist.rbegin())) {
    throw InvariantViolation("length histogram of " + g.to_string() + " is not palindromic");
  }
  if (hist.back() != 1) {
    throw InvariantViolation("longest element of " + g.to_string() + " is not unique");
  }
  const auto longest = static_cast<std::size_t>(
      std::max_element(t.length.begin(), t.length.end()) - t.length.begin());
  if (t.descents[0] != 0 || t.descents[longest] != g.rank()) {
    throw InvariantViolation("descent counts of identity/longest element of " + g.to_string() +
                             " are wrong");
  }
  return t;
}

Pmf oracle_pmf(const OracleTable& table, Statistic stat) {
  Pmf pmf;
  pmf.statistic = stat;
  pmf.group = table.group;
  pmf.counts = stat == Statistic::inv ? table.length_histogram() : table.descent_histogram();
  pmf.mass = normalize_counts(*pmf.counts);
  return pmf;
}

Pmf oracle_pmf(const GroupDescriptor& g, Statistic stat, std::uint64_t cap) {
  return oracle_pmf(enumerate(g, cap), stat);
}

OracleComparison compare_with_oracle(const GroupDescriptor& g, std::uint64_t cap) {
  const OracleTable t = enumerate(g, cap);
  OracleComparison c;
  c.group = g;
  c.oracle_inv = t.length_histogram();
  c.oracle_des = t.descent_histogram();
  c.analytic_inv = mahonian_polynomial(g).coeffs();
  c.analytic_des = eulerian_polynomial(g).coeffs();
  c.element_count = static_cast<unsigned long>(t.size());
  c.degree_product = group_summary(g).order;
  c.max_length = *std::max_element(t.length.begin(), t.length.end());
  c.reflection_count = g.reflection_count();
  return c;
}

}  // namespace coxext
