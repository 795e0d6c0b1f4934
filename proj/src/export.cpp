#include "coxext/export.hpp"

#include <cmath>
#include <cstdio>

namespace coxext {

std::string format_real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

namespace {

json real(double x) {
  if (std::isfinite(x)) return x;
  return format_real(x);
}

json big(const mpz_class& z) { return z.get_str(); }
json big(const mpq_class& q) { return q.get_str(); }

json counts_json(const std::vector<mpz_class>& v) {
  json arr = json::array();
  for (const auto& c : v) arr.push_back(big(c));
  return arr;
}

}  // namespace

json to_json(const GroupDescriptor& g) {
  const GroupSummary s = group_summary(g);
  json factors = json::array();
  for (const auto& f : g.factors()) factors.push_back(f.to_string());
  json degs = json::array();
  for (auto d : degrees(g).degrees) degs.push_back(d);
  return json{{"group", g.to_string()},
              {"factors", factors},
              {"rank", s.rank},
              {"reflection_count", s.reflection_count},
              {"order", big(s.order)},
              {"log_order", real(s.log_order)},
              {"degrees", degs}};
}

json to_json(const Pmf& pmf) {
  json j{{"group", pmf.group.to_string()},
         {"stat", to_string(pmf.statistic)},
         {"support", json::array({0, pmf.max_value()})}};
  json mass = json::array();
  for (double m : pmf.mass) mass.push_back(real(m));
  j["mass"] = std::move(mass);
  if (pmf.counts) j["counts"] = counts_json(*pmf.counts);
  return j;
}

json to_json(const Moments& m) {
  return json{{"mean", big(m.mean)},
              {"variance", big(m.variance)},
              {"mean_f", real(m.mean_f)},
              {"var_f", real(m.var_f)}};
}

json to_json(const RootList& roots, const BernoulliParams* params) {
  json q = json::array();
  for (double v : roots.q) q.push_back(real(v));
  json clusters = json::array();
  for (const auto& c : roots.clusters) {
    clusters.push_back(json{{"q", real(c.q)}, {"multiplicity", c.multiplicity}});
  }
  json j{{"q", q}, {"clusters", clusters}, {"residual", real(roots.residual)}};
  if (params) {
    json p = json::array();
    for (double v : params->p) p.push_back(real(v));
    j["p"] = p;
  }
  return j;
}

json to_json(const GumbelNorm& norm) {
  return json{{"n", norm.n},
              {"alpha", real(norm.alpha)},
              {"beta", real(norm.beta)},
              {"a", real(norm.a)},
              {"b", real(norm.b)},
              {"a_literal", real(norm.a_literal)}};
}

json to_json(const ConvergenceReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    rows.push_back(json{{"n", r.n},
                        {"N_n", r.rank},
                        {"a", real(r.a)},
                        {"b", real(r.b)},
                        {"sup_error", real(r.sup_error)},
                        {"argmax_x", real(r.argmax_x)}});
  }
  return json{{"stat", to_string(rep.statistic)},
              {"grid", json{{"x_min", rep.grid.x_min}, {"x_max", rep.grid.x_max}, {"step", rep.grid.step}}},
              {"rows", rows}};
}

json to_json(std::span<const TailRatio> rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    arr.push_back(json{{"x", real(r.x)},
                       {"tail", real(r.tail)},
                       {"normal_tail", real(r.normal_tail)},
                       {"ratio", r.ratio ? real(*r.ratio) : json(nullptr)},
                       {"smoothed_ratio", r.smoothed_ratio ? real(*r.smoothed_ratio) : json(nullptr)},
                       {"beyond_moderate_zone", r.beyond_moderate_zone}});
  }
  return arr;
}

json to_json(const SimReport& rep) {
  json rows = json::array();
  for (const auto& r : rep.rows) {
    json values = json::array();
    for (double v : r.normalized) values.push_back(real(v));
    rows.push_back(json{{"n", r.n},
                        {"group", r.group},
                        {"N_n", r.rank},
                        {"method", to_string(r.method)},
                        {"norm", to_json(r.norm)},
                        {"ks_gumbel", real(r.ks_gumbel)},
                        {"ks_exact", r.ks_exact ? real(*r.ks_exact) : json(nullptr)},
                        {"wall_seconds", real(r.wall_seconds)},
                        {"normalized_maxima", values}});
  }
  return json{{"sequence", rep.config.spec.to_string()},
              {"stat", to_string(rep.config.stat)},
              {"replicates", rep.config.replicates},
              {"seed", rep.config.seed},
              {"rows", rows}};
}

json to_json(std::span<const SequenceProfile> profiles) {
  json arr = json::array();
  for (const auto& p : profiles) {
    arr.push_back(json{{"n", p.n},
                       {"N_n", p.classical_rank},
                       {"k_n", p.dihedral_count},
                       {"R_n", p.total_rank},
                       {"n_max", p.n_max},
                       {"m_max", real(p.m_max)},
                       {"classical_norm", real(p.classical_norm)},
                       {"dihedral_norm", real(p.dihedral_norm)},
                       {"m_n", real(p.inverse_order_sum)},
                       {"mean", real(p.mean)},
                       {"s_n", real(p.sd)},
                       {"d_max", real(p.d_max)},
                       {"lambda", real(p.lambda)},
                       {"stat", to_string(p.statistic)}});
  }
  return arr;
}

json to_json(const ConditionReport& rep) {
  json rows = json::array();
  for (std::size_t i = 0; i < rep.ns.size(); ++i) {
    json row{{"n", rep.ns[i]}, {"ratio", real(rep.ratios[i])}};
    if (i < rep.alt_ratios.size()) row["alt_ratio"] = real(rep.alt_ratios[i]);
    rows.push_back(row);
  }
  json j{{"condition", to_string(rep.condition)},
         {"verdict", to_string(rep.verdict)},
         {"slope", real(rep.slope)},
         {"intercept", real(rep.intercept)},
         {"r_squared", real(rep.r_squared)},
         {"rows", rows}};
  if (!rep.note.empty()) j["note"] = rep.note;
  return j;
}

json to_json(const NormForm& nf) {
  return json{{"lhs", real(nf.lhs)},
              {"rhs", real(nf.rhs)},
              {"ratio", real(nf.ratio)},
              {"ratio_squared", big(nf.ratio_squared)}};
}

json to_json(const OracleComparison& c) {
  return json{{"group", c.group.to_string()},
              {"elements", big(c.element_count)},
              {"degree_product", big(c.degree_product)},
              {"max_length", c.max_length},
              {"reflection_count", c.reflection_count},
              {"inv", json{{"oracle", counts_json(c.oracle_inv)},
                           {"analytic", counts_json(c.analytic_inv)},
                           {"match", c.inv_match()}}},
              {"des", json{{"oracle", counts_json(c.oracle_des)},
                           {"analytic", counts_json(c.analytic_des)},
                           {"match", c.des_match()}}},
              {"ok", c.all_match()}};
}

void write_csv(std::ostream& out, const Pmf& pmf) {
  out << (pmf.counts ? "k,count,mass\n" : "k,mass\n");
  for (std::size_t k = 0; k < pmf.mass.size(); ++k) {
    out << k << ',';
    if (pmf.counts) out << (*pmf.counts)[k].get_str() << ',';
    out << format_real(pmf.mass[k]) << '\n';
  }
}

void write_csv(std::ostream& out, const ConvergenceReport& rep) {
  out << "n,N_n,a,b,sup_error,argmax_x\n";
  for (const auto& r : rep.rows) {
    out << r.n << ',' << r.rank << ',' << format_real(r.a) << ',' << format_real(r.b) << ','
        << format_real(r.sup_error) << ',' << format_real(r.argmax_x) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const TailRatio> rows) {
  out << "x,tail,normal_tail,ratio,smoothed_ratio,beyond_moderate_zone\n";
  for (const auto& r : rows) {
    out << format_real(r.x) << ',' << format_real(r.tail) << ',' << format_real(r.normal_tail) << ','
        << (r.ratio ? format_real(*r.ratio) : "undefined") << ','
        << (r.smoothed_ratio ? format_real(*r.smoothed_ratio) : "undefined") << ','
        << (r.beyond_moderate_zone ? 1 : 0) << '\n';
  }
}

void write_csv(std::ostream& out, const SimReport& rep) {
  out << "n,replicate,value\n";
  for (const auto& r : rep.rows) {
    for (std::size_t i = 0; i < r.normalized.size(); ++i) {
      out << r.n << ',' << i << ',' << format_real(r.normalized[i]) << '\n';
    }
  }
}

void write_csv(std::ostream& out, std::span<const SequenceProfile> profiles) {
  out << "n,N_n,k_n,R_n,n_max,m_max,classical_norm,dihedral_norm,m_n,mean,s_n,d_max,lambda\n";
  for (const auto& p : profiles) {
    out << p.n << ',' << p.classical_rank << ',' << p.dihedral_count << ',' << p.total_rank << ','
        << p.n_max << ',' << format_real(p.m_max) << ',' << format_real(p.classical_norm) << ','
        << format_real(p.dihedral_norm) << ',' << format_real(p.inverse_order_sum) << ','
        << format_real(p.mean) << ',' << format_real(p.sd) << ',' << format_real(p.d_max) << ','
        << format_real(p.lambda) << '\n';
  }
}

void write_csv(std::ostream& out, const ConditionReport& rep) {
  out << "n,ratio,verdict\n";
  for (std::size_t i = 0; i < rep.ns.size(); ++i) {
    out << rep.ns[i] << ',' << format_real(rep.ratios[i]) << ',' << to_string(rep.verdict) << '\n';
  }
}

void write_csv(std::ostream& out, const OracleTable& table) {
  out << "key,length,descents\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    out << table.key(i) << ',' << table.length[i] << ',' << table.descents[i] << '\n';
  }
}

}  // namespace coxext
