#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "coxext/groups.hpp"

namespace coxext {

/// Maps the row index n to a size: the rank N_n for classical families and
/// templates, the dihedral factor count k_n for dihedral families.
struct RankMap {
  enum class Kind { identity, log_power, table };
  Kind kind = Kind::identity;
  double power = 3.0;       // N = ceil(log(n)^power) + offset
  std::int64_t offset = 0;
  std::map<std::uint64_t, std::uint64_t> table;

  std::uint64_t operator()(std::uint64_t n) const;
  std::string to_string() const;
};

struct SequenceSpec {
  enum class Family { An, Bn, Dn, FixedDihedralPower, DihedralSchedule, ProductTemplate };
  Family family = Family::An;
  std::uint64_t dihedral_m = 0;             // FixedDihedralPower
  std::vector<mpz_class> schedule;          // DihedralSchedule: m_{n,i}, i = 1, 2, ...
  std::string template_text;                // ProductTemplate, "{N}" is the placeholder
  RankMap rank_map;

  std::string to_string() const;
};

/// One row of a sequence, split into classical and dihedral parts. Dihedral
/// orders are kept as doubles so astronomically large schedules can still be
/// profiled; `group` is set whenever every factor fits a descriptor.
struct SequenceRow {
  std::uint64_t n = 0;
  std::vector<IrreducibleFactor> classical;
  std::vector<double> dihedral_orders;
  std::optional<GroupDescriptor> group;
};

/// Text form used on the command line:
///   SPEC   := FAMILY [":" MAP]
///   FAMILY := "A" | "B" | "D" | "I2(" m ")" | "schedule=" PATH | "template=" DESCRIPTOR
///   MAP    := "n" | "log" P ["+" C] | "table=" PATH          (default "n")
/// e.g. "A:n", "B:log3+2", "I2(5):n", "schedule=orders.txt", "template=A{N} x I2(5)".
SequenceSpec parse_sequence_spec(std::string_view text);

/// One integer >= 2 per line; blank lines and '#' comments skipped. An order
/// of 2 is accepted for profiling (degrees {2, 2}) but such rows have no
/// group descriptor.
std::vector<mpz_class> read_schedule_file(const std::string& path);
std::map<std::uint64_t, std::uint64_t> read_rank_table(const std::string& path);

SequenceRow materialize_row(const SequenceSpec& spec, std::uint64_t n);
GroupDescriptor materialize(const SequenceSpec& spec, std::uint64_t n);

/// Comma list ("10,100,1000") or geometric shorthand "1e2..1e4x10".
std::vector<std::uint64_t> parse_n_list(std::string_view text);
std::vector<double> parse_real_list(std::string_view text);

}  // namespace coxext
