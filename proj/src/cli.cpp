#include "coxext/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>

#include <CLI11.hpp>

#include "coxext/conditions.hpp"
#include "coxext/errors.hpp"
#include "coxext/export.hpp"
#include "coxext/extremes.hpp"
#include "coxext/montecarlo.hpp"
#include "coxext/oracle.hpp"
#include "coxext/sequence.hpp"
#include "coxext/statistics.hpp"

namespace coxext {

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification = 1;
constexpr int exit_usage = 2;

struct Options {
  std::string format;
  std::string output;
  std::string group;
  std::string stat = "inv";
  std::string seq;
  std::string n_list;
  std::string x_list = "0.5,1,1.5,2";
  std::string grid;
  std::string condition;
  std::string method;
  std::string m_list;
  std::string table_path;
  std::uint64_t n = 0;
  std::uint64_t replicates = 1000;
  std::optional<std::uint64_t> seed;
  std::uint64_t cap = 1'000'000;
  unsigned threads = 0;
  double rel_tol = 1e-12;
  bool exact = false;
};

Grid parse_grid(const std::string& text) {
  const auto parts = parse_real_list([&] {
    std::string t = text;
    for (auto& c : t) {
      if (c == ':') c = ',';
    }
    return t;
  }());
  if (parts.size() != 3) throw DomainError("--grid expects a:b:h");
  Grid g{parts[0], parts[1], parts[2]};
  g.size();  // validates
  return g;
}

std::uint64_t resolve_seed(const Options& o) {
  if (o.seed) return *o.seed;
  if (const char* env = std::getenv("COXEXT_SEED")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    throw DomainError(std::string("COXEXT_SEED is not an unsigned integer: '") + env + "'");
  }
  return 0;
}

class Emitter {
 public:
  Emitter(const Options& o, std::ostream& out, std::string default_format)
      : format_(o.format.empty() ? std::move(default_format) : o.format), out_(&out) {
    if (!o.output.empty()) {
      file_.open(o.output);
      if (!file_) throw DomainError("cannot open output file '" + o.output + "'");
      out_ = &file_;
    }
  }
  bool csv() const { return format_ == "csv"; }
  std::ostream& stream() { return *out_; }
  void json_out(const json& j) { *out_ << j.dump(2) << '\n'; }

 private:
  std::string format_;
  std::ofstream file_;
  std::ostream* out_;
};

int cmd_describe(const Options& o, std::ostream& out) {
  Emitter e(o, out, "json");
  const auto g = parse_descriptor(o.group);
  const json j = to_json(g);
  if (e.csv()) {
    e.stream() << "group,rank,reflection_count,order,log_order,degrees\n"
               << '"' << g.to_string() << "\"," << j["rank"] << ',' << j["reflection_count"] << ','
               << j["order"].get<std::string>() << ',' << format_real(j["log_order"].get<double>())
               << ",\"";
    const auto& d = j["degrees"];
    for (std::size_t i = 0; i < d.size(); ++i) e.stream() << (i ? " " : "") << d[i];
    e.stream() << "\"\n";
  } else {
    e.json_out(j);
  }
  return exit_ok;
}

int cmd_pmf(const Options& o, std::ostream& out) {
  Emitter e(o, out, "csv");
  const auto g = parse_descriptor(o.group);
  const Statistic stat = parse_statistic(o.stat);
  Pmf pmf;
  if (o.exact) {
    pmf = stat == Statistic::inv ? mahonian_pmf(g, true) : [&] {
      Pmf p;
      p.statistic = stat;
      p.group = g;
      p.counts = eulerian_polynomial(g).coeffs();
      p.mass = normalize_counts(*p.counts);
      return p;
    }();
  } else {
    pmf = statistic_pmf(g, stat);
  }
  if (e.csv()) {
    write_csv(e.stream(), pmf);
  } else {
    e.json_out(to_json(pmf));
  }
  return exit_ok;
}

int cmd_moments(const Options& o, std::ostream& out) {
  Emitter e(o, out, "json");
  const auto g = parse_descriptor(o.group);
  const Statistic stat = parse_statistic(o.stat);
  const Moments m = moments(g, stat);
  if (e.csv()) {
    e.stream() << "group,stat,mean,variance,mean_f,var_f\n"
               << '"' << g.to_string() << "\"," << to_string(stat) << ',' << m.mean.get_str() << ','
               << m.variance.get_str() << ',' << format_real(m.mean_f) << ','
               << format_real(m.var_f) << '\n';
  } else {
    json j = to_json(m);
    j["group"] = g.to_string();
    j["stat"] = to_string(stat);
    e.json_out(j);
  }
  return exit_ok;
}

int cmd_roots(const Options& o, std::ostream& out) {
  Emitter e(o, out, "json");
  const auto g = parse_descriptor(o.group);
  const RootList roots = eulerian_roots(g, o.rel_tol);
  BernoulliParams params;
  for (double q : roots.q) params.p.push_back(1.0 / (1.0 + q));
  if (e.csv()) {
    e.stream() << "i,q,p\n";
    for (std::size_t i = 0; i < roots.q.size(); ++i) {
      e.stream() << i << ',' << format_real(roots.q[i]) << ',' << format_real(params.p[i]) << '\n';
    }
  } else {
    std::sort(params.p.begin(), params.p.end());
    json j = to_json(roots, &params);
    j["group"] = g.to_string();
    e.json_out(j);
  }
  return exit_ok;
}

int cmd_norms(const Options& o, std::ostream& out) {
  Emitter e(o, out, "json");
  const auto spec = parse_sequence_spec(o.seq);
  const Statistic stat = parse_statistic(o.stat);
  const std::uint64_t ns[] = {o.n};
  const auto profiles = profile_sequence(spec, ns, stat);
  const GumbelNorm norm = norming_constants(o.n, profiles[0].mean, profiles[0].sd);
  if (e.csv()) {
    e.stream() << "n,alpha,beta,a,b,mean,s_n\n"
               << o.n << ',' << format_real(norm.alpha) << ',' << format_real(norm.beta) << ','
               << format_real(norm.a) << ',' << format_real(norm.b) << ','
               << format_real(profiles[0].mean) << ',' << format_real(profiles[0].sd) << '\n';
  } else {
    json j = to_json(norm);
    j["sequence"] = spec.to_string();
    j["stat"] = to_string(stat);
    j["profile"] = to_json(std::span<const SequenceProfile>(profiles))[0];
    e.json_out(j);
  }
  return exit_ok;
}

int cmd_converge(const Options& o, std::ostream& out) {
  Emitter e(o, out, "csv");
  const auto spec = parse_sequence_spec(o.seq);
  const Statistic stat = parse_statistic(o.stat);
  const auto ns = parse_n_list(o.n_list);
  const Grid grid = o.grid.empty() ? Grid{} : parse_grid(o.grid);
  const auto rep = gumbel_convergence(spec, stat, ns, grid);
  if (e.csv()) {
    write_csv(e.stream(), rep);
  } else {
    json j = to_json(rep);
    j["sequence"] = spec.to_string();
    e.json_out(j);
  }
  return exit_ok;
}

int cmd_tailratio(const Options& o, std::ostream& out, std::ostream& err) {
  Emitter e(o, out, "csv");
  const auto g = parse_descriptor(o.group);
  const Statistic stat = parse_statistic(o.stat);
  const auto xs = parse_real_list(o.x_list);
  const auto rows = tail_ratio(statistic_pmf(g, stat), moments(g, stat), xs);
  for (const auto& r : rows) {
    if (r.beyond_moderate_zone) {
      err << "warning: x=" << format_real(r.x) << " lies beyond rank^(1/6)\n";
    }
  }
  if (e.csv()) {
    write_csv(e.stream(), std::span<const TailRatio>(rows));
  } else {
    json j{{"group", g.to_string()}, {"stat", to_string(stat)}};
    j["rows"] = to_json(std::span<const TailRatio>(rows));
    e.json_out(j);
  }
  return exit_ok;
}

int cmd_simulate(const Options& o, std::ostream& out) {
  Emitter e(o, out, "json");
  SimConfig c;
  c.spec = parse_sequence_spec(o.seq);
  c.stat = parse_statistic(o.stat);
  c.rows = parse_n_list(o.n_list);
  c.replicates = o.replicates;
  c.seed = resolve_seed(o);
  c.threads = o.threads;
  if (!o.method.empty()) c.method = parse_sampler_method(o.method);
  const SimReport rep = simulate(c);
  if (e.csv()) {
    write_csv(e.stream(), rep);
  } else {
    e.json_out(to_json(rep));
  }
  return exit_ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  Emitter e(o, out, "csv");
  const auto spec = parse_sequence_spec(o.seq);
  const Statistic stat = parse_statistic(o.stat);
  const ConditionId id = parse_condition(o.condition);
  const auto ns = parse_n_list(o.n_list);
  const auto profiles = profile_sequence(spec, ns, stat);
  const auto rep = check_growth(profiles, id);
  if (e.csv()) {
    write_csv(e.stream(), rep);
  } else {
    json j = to_json(rep);
    j["sequence"] = spec.to_string();
    j["stat"] = to_string(stat);
    j["profiles"] = to_json(std::span<const SequenceProfile>(profiles));
    e.json_out(j);
  }
  return exit_ok;
}

int cmd_normcheck(const Options& o, std::ostream& out) {
  Emitter e(o, out, "json");
  std::vector<mpz_class> m;
  std::stringstream ss(o.m_list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    mpz_class v;
    if (v.set_str(item, 10) != 0) throw DomainError("--m expects integers, got '" + item + "'");
    m.push_back(v);
  }
  const NormForm nf = norm_form_check(m);
  if (e.csv()) {
    e.stream() << "lhs,rhs,ratio\n"
               << format_real(nf.lhs) << ',' << format_real(nf.rhs) << ',' << format_real(nf.ratio)
               << '\n';
  } else {
    e.json_out(to_json(nf));
  }
  return exit_ok;
}

int cmd_oracle_verify(const Options& o, std::ostream& out) {
  Emitter e(o, out, "json");
  const auto g = parse_descriptor(o.group);
  const OracleComparison c = compare_with_oracle(g, o.cap);
  if (!o.table_path.empty()) {
    std::ofstream f(o.table_path);
    if (!f) throw DomainError("cannot open table file '" + o.table_path + "'");
    write_csv(f, enumerate(g, o.cap));
  }
  if (e.csv()) {
    e.stream() << "group,elements,inv_match,des_match,order_match,length_match\n"
               << '"' << g.to_string() << "\"," << c.element_count.get_str() << ','
               << c.inv_match() << ',' << c.des_match() << ',' << c.order_match() << ','
               << c.length_match() << '\n';
  } else {
    e.json_out(to_json(c));
  }
  return c.all_match() ? exit_ok : exit_verification;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact permutation statistics and Gumbel asymptotics on finite Coxeter groups",
               "coxext"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  app.add_option("-o,--output", o.output, "Write output to a file instead of stdout");

  const auto stats = CLI::IsMember({"inv", "des"});
  auto group_arg = [&](CLI::App* sub) {
    sub->add_option("group", o.group, "Group descriptor, e.g. \"B2 x I2(5)^2\"")->required();
  };
  auto stat_opt = [&](CLI::App* sub) {
    sub->add_option("--stat", o.stat, "Statistic: inv or des")->check(stats);
  };
  std::function<int()> action;

  auto* describe = app.add_subcommand("describe", "Rank, order and degrees of a group");
  group_arg(describe);
  describe->callback([&] { action = [&] { return cmd_describe(o, out); }; });

  auto* pmf = app.add_subcommand("pmf", "Distribution of a statistic");
  group_arg(pmf);
  stat_opt(pmf);
  pmf->add_flag("--exact", o.exact, "Exact integer counts");
  pmf->callback([&] { action = [&] { return cmd_pmf(o, out); }; });

  auto* mom = app.add_subcommand("moments", "Exact mean and variance");
  group_arg(mom);
  stat_opt(mom);
  mom->callback([&] { action = [&] { return cmd_moments(o, out); }; });

  auto* roots = app.add_subcommand("roots", "Negated roots of the Eulerian polynomial");
  group_arg(roots);
  roots->add_option("--rel-tol", o.rel_tol, "Relative root tolerance")->check(CLI::Range(1e-15, 0.5));
  roots->callback([&] { action = [&] { return cmd_roots(o, out); }; });

  auto* norms = app.add_subcommand("norms", "Norming constants of one sequence row");
  norms->add_option("--seq", o.seq, "Sequence spec, e.g. A:n")->required();
  stat_opt(norms);
  norms->add_option("--n", o.n, "Row index n (>= 2)")->required();
  norms->callback([&] { action = [&] { return cmd_norms(o, out); }; });

  auto* conv = app.add_subcommand("converge", "Exact Gumbel sup-error along a sequence");
  conv->add_option("--seq", o.seq, "Sequence spec")->required();
  stat_opt(conv);
  conv->add_option("--n-list", o.n_list, "Rows: 100,1000 or 1e2..1e4x10")->required();
  conv->add_option("--grid", o.grid, "x grid a:b:h (default -3:6:0.01)");
  conv->callback([&] { action = [&] { return cmd_converge(o, out); }; });

  auto* tail = app.add_subcommand("tailratio", "Upper-tail ratio against the normal tail");
  group_arg(tail);
  stat_opt(tail);
  tail->add_option("--x-list", o.x_list, "Comma-separated x values");
  tail->callback([&] { action = [&] { return cmd_tailratio(o, out, err); }; });

  auto* sim = app.add_subcommand("simulate", "Monte Carlo row maxima");
  sim->add_option("--seq", o.seq, "Sequence spec")->required();
  stat_opt(sim);
  sim->add_option("--n-list", o.n_list, "Rows")->required();
  sim->add_option("--replicates", o.replicates, "Replicates per row")->check(CLI::PositiveNumber);
  sim->add_option("--seed", o.seed, "Master seed (default $COXEXT_SEED, else 0)");
  sim->add_option("--method", o.method, "Sampler")
      ->check(CLI::IsMember({"decomposition", "inverse_cdf"}));
  sim->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  sim->callback([&] { action = [&] { return cmd_simulate(o, out); }; });

  auto* check = app.add_subcommand("check", "Growth-condition diagnostic along a sequence");
  check->add_option("--seq", o.seq, "Sequence spec")->required();
  stat_opt(check);
  check->add_option("--condition", o.condition, "Condition id")
      ->required()
      ->check(CLI::IsMember({"rank_growth", "inv_classical", "des_variance", "inv_products",
                             "inv_dihedral", "des_dihedral", "dihedral_power_inv", "dihedral_power_des"}));
  check->add_option("--n-list", o.n_list, "Rows")->required();
  check->callback([&] { action = [&] { return cmd_check(o, out); }; });

  auto* normcheck = app.add_subcommand("normcheck", "max m_i against ||m||_2 / sqrt(k)");
  normcheck->add_option("--m", o.m_list, "Comma-separated dihedral orders")->required();
  normcheck->callback([&] { action = [&] { return cmd_normcheck(o, out); }; });

  auto* oracle = app.add_subcommand("oracle-verify", "Compare analytic counts with brute force");
  group_arg(oracle);
  oracle->add_option("--cap", o.cap, "Largest group order to enumerate");
  oracle->add_option("--table", o.table_path, "Also write the element table as CSV");
  oracle->callback([&] { action = [&] { return cmd_oracle_verify(o, out); }; });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    return action ? action() : exit_usage;
  } catch (const InvariantViolation& e) {
    err << "verification failure: " << e.what() << '\n';
    return exit_verification;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return exit_verification;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return exit_verification;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(std::move(args), out, err);
}

}  // namespace coxext
