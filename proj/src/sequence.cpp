#include "coxext/sequence.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "coxext/errors.hpp"

namespace coxext {

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

double parse_real(std::string_view text) {
  const std::string t = trim(text);
  if (t.empty()) throw DomainError("expected a number");
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + t + "'");
  }
  if (used != t.size()) throw DomainError("not a number: '" + t + "'");
  return v;
}

std::uint64_t parse_count(std::string_view text) {
  const double v = parse_real(text);
  if (!(v >= 1) || v != std::floor(v) || v > 9.0e15) {
    throw DomainError("expected a positive integer, got '" + trim(text) + "'");
  }
  return static_cast<std::uint64_t>(v);
}

std::optional<RankMap> try_parse_map(std::string_view text) {
  const std::string t = trim(text);
  RankMap map;
  if (t == "n") return map;
  if (t.rfind("table=", 0) == 0) {
    map.kind = RankMap::Kind::table;
    map.table = read_rank_table(t.substr(6));
    return map;
  }
  if (t.rfind("log", 0) == 0) {
    map.kind = RankMap::Kind::log_power;
    std::string rest = t.substr(3);
    const auto plus = rest.find('+');
    try {
      map.power = parse_real(rest.substr(0, plus));
      if (plus != std::string::npos) map.offset = std::stoll(trim(rest.substr(plus + 1)));
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (!(map.power > 0)) return std::nullopt;
    return map;
  }
  return std::nullopt;
}

}  // namespace

std::uint64_t RankMap::operator()(std::uint64_t n) const {
  switch (kind) {
    case Kind::identity:
      return n;
    case Kind::log_power: {
      const double v = std::ceil(std::pow(std::log(static_cast<double>(n)), power)) +
                       static_cast<double>(offset);
      return v < 0 ? 0 : static_cast<std::uint64_t>(v);
    }
    case Kind::table: {
      const auto it = table.find(n);
      if (it == table.end()) throw DomainError("rank table has no entry for n=" + std::to_string(n));
      return it->second;
    }
  }
  return n;
}

std::string RankMap::to_string() const {
  switch (kind) {
    case Kind::identity: return "n";
    case Kind::log_power: {
      std::ostringstream os;
      os << "log" << power;
      if (offset) os << '+' << offset;
      return os.str();
    }
    case Kind::table: return "table";
  }
  return "?";
}

std::string SequenceSpec::to_string() const {
  std::string fam;
  switch (family) {
    case Family::An: fam = "A"; break;
    case Family::Bn: fam = "B"; break;
    case Family::Dn: fam = "D"; break;
    case Family::FixedDihedralPower: fam = "I2(" + std::to_string(dihedral_m) + ")"; break;
    case Family::DihedralSchedule: fam = "schedule"; break;
    case Family::ProductTemplate: fam = "template=" + template_text; break;
  }
  return fam + ":" + rank_map.to_string();
}

SequenceSpec parse_sequence_spec(std::string_view text) {
  std::string body = trim(text);
  SequenceSpec spec;
  const auto colon = body.rfind(':');
  if (colon != std::string::npos) {
    if (auto map = try_parse_map(std::string_view(body).substr(colon + 1))) {
      spec.rank_map = std::move(*map);
      body = trim(std::string_view(body).substr(0, colon));
    }
  }
  if (body == "A" || body == "An") {
    spec.family = SequenceSpec::Family::An;
  } else if (body == "B" || body == "Bn") {
    spec.family = SequenceSpec::Family::Bn;
  } else if (body == "D" || body == "Dn") {
    spec.family = SequenceSpec::Family::Dn;
  } else if (body.rfind("schedule=", 0) == 0) {
    spec.family = SequenceSpec::Family::DihedralSchedule;
    spec.schedule = read_schedule_file(body.substr(9));
  } else if (body.rfind("template=", 0) == 0) {
    spec.family = SequenceSpec::Family::ProductTemplate;
    spec.template_text = body.substr(9);
    if (spec.template_text.find("{N}") == std::string::npos) {
      throw DomainError("template needs a {N} placeholder");
    }
  } else if (body.rfind("I2(", 0) == 0 && body.back() == ')') {
    spec.family = SequenceSpec::Family::FixedDihedralPower;
    spec.dihedral_m = parse_count(body.substr(3, body.size() - 4));
    if (spec.dihedral_m < 3) throw DomainError("dihedral order must be at least 3");
  } else {
    throw DomainError("unknown sequence family '" + body + "'");
  }
  return spec;
}

std::vector<mpz_class> read_schedule_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open schedule file '" + path + "'");
  std::vector<mpz_class> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    const std::string t = trim(std::string_view(line).substr(0, hash));
    if (t.empty()) continue;
    mpz_class v;
    if (v.set_str(t, 10) != 0 || v < 2) {
      throw DomainError("schedule line " + std::to_string(lineno) +
                        ": expected an integer >= 2, got '" + t + "'");
    }
    out.push_back(v);
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> read_rank_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open rank table '" + path + "'");
  std::map<std::uint64_t, std::uint64_t> out;
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    std::istringstream ls(line.substr(0, hash == std::string::npos ? line.size() : hash));
    std::uint64_t n = 0, v = 0;
    if (ls >> n >> v) out[n] = v;
  }
  return out;
}

SequenceRow materialize_row(const SequenceSpec& spec, std::uint64_t n) {
  if (n < 1) throw DomainError("row index must be >= 1");
  SequenceRow row;
  row.n = n;
  const std::uint64_t size = spec.rank_map(n);
  auto fail = [&](const std::string& why) {
    return DomainError("cannot materialize row n=" + std::to_string(n) + " of " + spec.to_string() +
                       ": " + why);
  };
  try {
    switch (spec.family) {
      case SequenceSpec::Family::An:
        row.classical.push_back(IrreducibleFactor::make(FactorKind::A, size));
        break;
      case SequenceSpec::Family::Bn:
        row.classical.push_back(IrreducibleFactor::make(FactorKind::B, size));
        break;
      case SequenceSpec::Family::Dn:
        row.classical.push_back(IrreducibleFactor::make(FactorKind::D, size));
        break;
      case SequenceSpec::Family::FixedDihedralPower:
        if (size < 1) throw fail("needs at least one dihedral factor");
        row.dihedral_orders.assign(size, static_cast<double>(spec.dihedral_m));
        break;
      case SequenceSpec::Family::DihedralSchedule:
        if (size < 1) throw fail("needs at least one dihedral factor");
        if (size > spec.schedule.size()) {
          throw fail("schedule has only " + std::to_string(spec.schedule.size()) + " entries, need " +
                     std::to_string(size));
        }
        for (std::uint64_t i = 0; i < size; ++i) {
          const double m = spec.schedule[i].get_d();
          if (!std::isfinite(m)) throw fail("dihedral order exceeds floating-point range");
          row.dihedral_orders.push_back(m);
        }
        break;
      case SequenceSpec::Family::ProductTemplate: {
        std::string text = spec.template_text;
        for (auto pos = text.find("{N}"); pos != std::string::npos; pos = text.find("{N}")) {
          text.replace(pos, 3, std::to_string(size));
        }
        const GroupDescriptor g = parse_descriptor(text);
        for (const auto& f : g.factors()) {
          if (f.kind == FactorKind::I2) {
            row.dihedral_orders.push_back(static_cast<double>(f.param));
          } else {
            row.classical.push_back(f);
          }
        }
        row.group = g;
        return row;
      }
    }
  } catch (const DomainError& e) {
    if (std::string(e.what()).rfind("cannot materialize", 0) == 0) throw;
    throw fail(e.what());
  }

  std::vector<IrreducibleFactor> factors = row.classical;
  bool representable = true;
  if (spec.family == SequenceSpec::Family::FixedDihedralPower) {
    factors.assign(size, IrreducibleFactor::make(FactorKind::I2, spec.dihedral_m));
  } else if (spec.family == SequenceSpec::Family::DihedralSchedule) {
    for (std::uint64_t i = 0; i < size; ++i) {
      if (!spec.schedule[i].fits_ulong_p() || spec.schedule[i] < 3) {
        representable = false;
        break;
      }
      factors.push_back(IrreducibleFactor::make(FactorKind::I2, spec.schedule[i].get_ui()));
    }
  }
  if (representable) row.group = GroupDescriptor(std::move(factors));
  return row;
}

GroupDescriptor materialize(const SequenceSpec& spec, std::uint64_t n) {
  auto row = materialize_row(spec, n);
  if (!row.group) {
    throw DomainError("row n=" + std::to_string(n) +
                      " has dihedral orders too large for a group descriptor");
  }
  return *row.group;
}

std::vector<std::uint64_t> parse_n_list(std::string_view text) {
  const std::string t = trim(text);
  std::vector<std::uint64_t> out;
  const auto dots = t.find("..");
  if (dots != std::string::npos) {
    const auto x = t.find('x', dots);
    if (x == std::string::npos) throw DomainError("range shorthand needs a factor: a..bxF");
    const double start = parse_real(t.substr(0, dots));
    const double stop = parse_real(t.substr(dots + 2, x - dots - 2));
    const double factor = parse_real(t.substr(x + 1));
    if (!(start >= 1) || !(stop >= start) || !(factor > 1)) {
      throw DomainError("range shorthand needs 1 <= a <= b and factor > 1");
    }
    for (double v = start; v <= stop * (1 + 1e-12); v *= factor) {
      out.push_back(static_cast<std::uint64_t>(std::llround(v)));
    }
    return out;
  }
  std::stringstream ss(t);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_count(item));
  if (out.empty()) throw DomainError("empty n-list");
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  std::vector<double> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(item));
  if (out.empty()) throw DomainError("empty list");
  return out;
}

}  // namespace coxext
