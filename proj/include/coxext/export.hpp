#pragma once

#include <ostream>
#include <span>
#include <string>

#include <json.hpp>

#include "coxext/conditions.hpp"
#include "coxext/extremes.hpp"
#include "coxext/groups.hpp"
#include "coxext/montecarlo.hpp"
#include "coxext/oracle.hpp"
#include "coxext/pmf.hpp"
#include "coxext/roots.hpp"
#include "coxext/statistics.hpp"

namespace coxext {

using json = nlohmann::ordered_json;

/// Shortest decimal form that round-trips a double.
std::string format_real(double x);

// Big integers (counts, orders, rationals) are written as decimal strings so
// that JSON readers with 53-bit numbers do not lose digits.
json to_json(const GroupDescriptor& g);
json to_json(const Pmf& pmf);
json to_json(const Moments& m);
json to_json(const RootList& roots, const BernoulliParams* params = nullptr);
json to_json(const GumbelNorm& norm);
json to_json(const ConvergenceReport& rep);
json to_json(std::span<const TailRatio> rows);
json to_json(const SimReport& rep);
json to_json(std::span<const SequenceProfile> profiles);
json to_json(const ConditionReport& rep);
json to_json(const NormForm& nf);
json to_json(const OracleComparison& c);

void write_csv(std::ostream& out, const Pmf& pmf);
void write_csv(std::ostream& out, const ConvergenceReport& rep);
void write_csv(std::ostream& out, std::span<const TailRatio> rows);
void write_csv(std::ostream& out, const SimReport& rep);  // n,replicate,value
void write_csv(std::ostream& out, std::span<const SequenceProfile> profiles);
void write_csv(std::ostream& out, const ConditionReport& rep);  // n,ratio,verdict
void write_csv(std::ostream& out, const OracleTable& table);    // key,length,descents

}  // namespace coxext
