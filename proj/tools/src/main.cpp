// coverbound: certified covering/packing bounds from moment relaxations.
// stdout carries the report, stderr carries diagnostics.
// exit codes: 0 ok/optimal, 1 input error, 2 solver stopped short, 3 verify failed.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "coverbound/bounds.hpp"
#include "coverbound/exact.hpp"
#include "coverbound/generators.hpp"
#include "coverbound/io.hpp"
#include "coverbound/sdpa_io.hpp"
#include "coverbound/suites.hpp"

namespace cb = coverbound;
using ordered_json = nlohmann::ordered_json;

namespace {

constexpr int kLevelCap = 3;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("cannot parse " + what + " from '" + s + "'");
  }
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("cannot parse " + what + " from '" + s + "'");
  }
}

std::size_t family_cap() {
  const char* env = std::getenv("COVERBOUND_CAP_FAMILY");
  if (!env || !*env) return cb::SetFamily::kDefaultCap;
  long v = parse_long(env, "COVERBOUND_CAP_FAMILY");
  if (v < 1) throw InputError("COVERBOUND_CAP_FAMILY must be positive");
  return static_cast<std::size_t>(v);
}

struct Source {
  std::variant<cb::Graph, cb::FiniteMetricSpace> inst{cb::Graph(1)};
  cb::InstanceRef ref;

  bool is_metric() const { return inst.index() == 1; }
  const cb::Graph& graph() const { return std::get<cb::Graph>(inst); }
  const cb::FiniteMetricSpace& metric() const {
    return std::get<cb::FiniteMetricSpace>(inst);
  }
};

// kind:p1:p2 generator specs; random and sphere consume the global seed
Source generate_instance(const std::string& spec, std::uint64_t seed) {
  std::vector<std::string> parts = split(spec, ':');
  const std::string& kind = parts[0];
  auto argc = parts.size() - 1;
  auto want = [&](std::size_t n) {
    if (argc != n) {
      throw InputError("generator '" + kind + "' takes " + std::to_string(n) +
                       " parameter(s), got " + std::to_string(argc));
    }
  };
  Source src;
  src.ref.kind = kind;
  src.ref.params.assign(parts.begin() + 1, parts.end());
  if (kind == "cycle") {
    want(1);
    src.inst = cb::cycle_graph(static_cast<int>(parse_long(parts[1], "cycle size")));
  } else if (kind == "path") {
    want(1);
    src.inst = cb::path_graph(static_cast<int>(parse_long(parts[1], "path size")));
  } else if (kind == "complete") {
    want(1);
    src.inst = cb::complete_graph(static_cast<int>(parse_long(parts[1], "clique size")));
  } else if (kind == "petersen") {
    want(0);
    src.inst = cb::petersen_graph();
  } else if (kind == "random") {
    want(2);
    src.inst = cb::random_graph(static_cast<int>(parse_long(parts[1], "vertex count")),
                                parse_double(parts[2], "edge probability"), seed);
    src.ref.params.push_back("seed=" + std::to_string(seed));
  } else if (kind == "hamming") {
    want(1);
    src.inst = cb::hamming_space(static_cast<int>(parse_long(parts[1], "cube dimension")));
  } else if (kind == "sphere") {
    want(2);
    src.inst = cb::sphere_sample_space(static_cast<int>(parse_long(parts[1], "sample count")),
                                       static_cast<int>(parse_long(parts[2], "dimension")),
                                       seed);
    src.ref.params.push_back("seed=" + std::to_string(seed));
  } else if (kind == "cycle-metric") {
    want(1);
    src.inst = cb::cycle_metric(static_cast<int>(parse_long(parts[1], "point count")));
  } else {
    throw InputError("unknown generator kind '" + kind +
                     "'; known: cycle path complete petersen random hamming sphere "
                     "cycle-metric");
  }
  return src;
}

Source load_source(const std::string& generate, const std::string& input,
                   const std::string& metric, std::uint64_t seed) {
  int given = (!generate.empty()) + (!input.empty()) + (!metric.empty());
  if (given != 1)
    throw InputError("give exactly one of --generate, --input, --metric");
  if (!generate.empty()) return generate_instance(generate, seed);
  Source src;
  if (!input.empty()) {
    src.inst = cb::read_dimacs_file(input);
    src.ref.kind = "file";
    src.ref.params = {input};
  } else {
    src.inst = cb::read_distance_csv_file(metric);
    src.ref.kind = "metric";
    src.ref.params = {metric};
  }
  return src;
}

cb::ProblemKind parse_problem(const std::string& s) {
  if (s == "cover") return cb::ProblemKind::Cover;
  if (s == "pack") return cb::ProblemKind::Pack;
  if (s == "cover_separated") return cb::ProblemKind::CoverSeparated;
  throw InputError("unknown problem '" + s + "'; known: cover pack cover_separated");
}

void check_level_cap(int level, bool allow_high) {
  if (level < 1) throw InputError("level must be >= 1");
  if (level > kLevelCap && !allow_high) {
    throw InputError("level " + std::to_string(level) +
                     " exceeds the default level cap of " + std::to_string(kLevelCap) +
                     "; pass --allow-high-level to override");
  }
}

ordered_json report_json(const cb::BoundReport& rep) {
  ordered_json j;
  j["schema_version"] = "1";
  j["instance"] = {{"kind", rep.instance.kind},
                   {"params", rep.instance.params},
                   {"n", rep.instance.n}};
  j["problem"] = rep.problem;
  j["level"] = rep.level;
  j["bound"] = rep.bound;
  j["status"] = rep.status;
  j["certified_lower_bound"] =
      rep.certified_lower_bound ? ordered_json(*rep.certified_lower_bound)
                                : ordered_json(nullptr);
  j["volume_bound"] =
      rep.volume_bound ? ordered_json(rep.volume_bound->value()) : ordered_json(nullptr);
  j["exact"] = rep.exact ? ordered_json(*rep.exact) : ordered_json(nullptr);
  j["greedy"] = rep.greedy_size ? ordered_json(*rep.greedy_size) : ordered_json(nullptr);
  j["residuals"] = {{"primal", rep.residual_primal}, {"gap", rep.residual_gap}};
  j["iterations"] = rep.iterations;
  j["wall_time_ms"] = rep.wall_time_ms;
  return j;
}

const char* kReportCsvHeader =
    "instance_kind,instance_params,n,problem,level,bound,status,"
    "certified_lower_bound,volume_bound,exact,greedy,residual_primal,residual_gap,"
    "iterations,wall_time_ms";

std::string csv_join_params(const std::vector<std::string>& params) {
  std::string out;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ';';
    out += params[i];
  }
  return out;
}

std::string report_csv_row(const cb::BoundReport& rep) {
  std::string row = rep.instance.kind + "," + csv_join_params(rep.instance.params) + "," +
                    std::to_string(rep.instance.n) + "," + rep.problem + "," +
                    std::to_string(rep.level) + "," + fmt(rep.bound) + "," + rep.status +
                    ",";
  row += rep.certified_lower_bound ? fmt(*rep.certified_lower_bound) : "";
  row += ",";
  row += rep.volume_bound ? fmt(rep.volume_bound->value()) : "";
  row += ",";
  row += rep.exact ? std::to_string(*rep.exact) : "";
  row += ",";
  row += rep.greedy_size ? std::to_string(*rep.greedy_size) : "";
  row += "," + fmt(rep.residual_primal) + "," + fmt(rep.residual_gap) + "," +
         std::to_string(rep.iterations) + "," + fmt(rep.wall_time_ms);
  return row;
}

void print_report_text(std::ostream& os, const cb::BoundReport& rep) {
  os << "instance: " << rep.instance.kind;
  if (!rep.instance.params.empty()) os << ":" << csv_join_params(rep.instance.params);
  os << " (n=" << rep.instance.n << ")\n";
  os << "problem: " << rep.problem << "\n";
  os << "level: " << rep.level << "\n";
  os << "bound: " << fmt(rep.bound) << "\n";
  os << "status: " << rep.status << "\n";
  if (rep.certified_lower_bound)
    os << "certified_lower_bound: " << fmt(*rep.certified_lower_bound) << "\n";
  if (rep.volume_bound)
    os << "volume_bound: " << rep.volume_bound->str() << " ("
       << fmt(rep.volume_bound->value()) << ")\n";
  if (rep.exact) os << "exact: " << *rep.exact << "\n";
  if (rep.greedy_size) os << "greedy: " << *rep.greedy_size << "\n";
  os << "residuals: primal=" << fmt(rep.residual_primal)
     << " gap=" << fmt(rep.residual_gap) << "\n";
  os << "iterations: " << rep.iterations << "\n";
  os << "wall_time_ms: " << fmt(rep.wall_time_ms) << "\n";
}

struct CommonFlags {
  std::string generate, input, metric;
  std::string problem = "cover";
  std::string format = "text";
  int level = 1;
  bool allow_high_level = false;
  double r = 0.0, eps = 0.0;
  std::uint64_t seed = 1;
  int jobs = 0;
  double tol = 1e-8;
  long max_iter = 200000;
  bool no_scale = false;

  cb::SolveOptions solve_options() const {
    cb::SolveOptions s;
    s.tol = tol;
    s.max_iter = max_iter;
    s.scale = !no_scale;
    return s;
  }
};

void add_solver_flags(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--tol", f.tol, "solver tolerance");
  cmd->add_option("--max-iter", f.max_iter, "solver iteration budget");
  cmd->add_flag("--no-scale", f.no_scale, "disable data rescaling");
}

void add_source_flags(CLI::App* cmd, CommonFlags& f, bool with_metric = true) {
  cmd->add_option("--generate", f.generate, "generator spec kind:p1:p2");
  cmd->add_option("--input", f.input, "DIMACS graph file");
  if (with_metric) cmd->add_option("--metric", f.metric, "distance-matrix CSV file");
}

int status_exit_code(const std::string& status) {
  return status == "optimal" ? 0 : 2;
}

// ---- bound ----------------------------------------------------------------

int cmd_bound(const CommonFlags& f, const std::string& dump_sdpa,
              const std::string& out_path) {
  check_level_cap(f.level, f.allow_high_level);
  Source src = load_source(f.generate, f.input, f.metric, f.seed);
  cb::ProblemKind kind = parse_problem(f.problem);
  cb::BoundRequest req;
  req.problem = kind;
  req.level = f.level;
  req.solve = f.solve_options();
  req.family_cap = family_cap();

  cb::BoundReport rep;
  if (src.is_metric()) {
    if (kind != cb::ProblemKind::CoverSeparated)
      throw InputError("metric instances take --problem cover_separated");
    if (!(f.r > 0.0)) throw InputError("cover_separated requires --r > 0");
    if (!(f.eps > 0.0)) throw InputError("cover_separated requires --eps > 0");
    req.r = f.r;
    req.eps = f.eps;
    src.ref.params.push_back("r=" + fmt(f.r));
    src.ref.params.push_back("eps=" + fmt(f.eps));
    if (!dump_sdpa.empty()) {
      cb::AssembledSdp asdp =
          cb::assemble_cover_separated(src.metric(), f.r, f.eps, f.level, req.family_cap);
      cb::write_sdpa_file(asdp.problem, dump_sdpa);
    }
    rep = cb::solve_bound(src.metric(), req, src.ref);
  } else {
    if (kind == cb::ProblemKind::CoverSeparated)
      throw InputError("cover_separated requires a metric instance (--metric or a "
                       "metric generator)");
    if (f.r != 0.0 || f.eps != 0.0)
      throw InputError("graph problems do not take --r or --eps");
    if (!dump_sdpa.empty()) {
      cb::AssembledSdp asdp = kind == cb::ProblemKind::Cover
                                  ? cb::assemble_cover(src.graph(), f.level, req.family_cap)
                                  : cb::assemble_pack(src.graph(), f.level, req.family_cap);
      cb::write_sdpa_file(asdp.problem, dump_sdpa);
    }
    rep = cb::solve_bound(src.graph(), req, src.ref);
  }

  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot open output file " + out_path);
    os = &file;
  }
  if (f.format == "json") {
    *os << report_json(rep).dump(2) << "\n";
  } else if (f.format == "csv") {
    *os << kReportCsvHeader << "\n" << report_csv_row(rep) << "\n";
  } else {
    print_report_text(*os, rep);
  }
  return status_exit_code(rep.status);
}

// ---- exact ----------------------------------------------------------------

int cmd_exact(const CommonFlags& f) {
  Source src = load_source(f.generate, f.input, f.metric, f.seed);
  cb::ProblemKind kind = parse_problem(f.problem);
  cb::Graph g(1);
  if (src.is_metric()) {
    if (!(f.r > 0.0))
      throw InputError("exact on a metric instance needs --r to build the covering graph");
    g = cb::covering_graph(src.metric(), f.r);
    src.ref.params.push_back("r=" + fmt(f.r));
  } else {
    g = src.graph();
  }
  if (kind == cb::ProblemKind::CoverSeparated)
    throw InputError("exact supports --problem cover or pack");
  cb::ExactResult res =
      kind == cb::ProblemKind::Cover ? cb::domination_number(g) : cb::independence_number(g);

  if (f.format == "json") {
    ordered_json j;
    j["schema_version"] = "1";
    j["instance"] = {{"kind", src.ref.kind}, {"params", src.ref.params},
                     {"n", g.vertex_count()}};
    j["problem"] = f.problem;
    j["value"] = res.value;
    j["witness"] = res.witness;
    j["wall_time_ms"] = res.wall_seconds * 1000.0;
    std::cout << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    std::cout << "instance_kind,instance_params,n,problem,value,witness\n";
    std::string wit;
    for (std::size_t i = 0; i < res.witness.size(); ++i) {
      if (i) wit += ';';
      wit += std::to_string(res.witness[i]);
    }
    std::cout << src.ref.kind << "," << csv_join_params(src.ref.params) << ","
              << g.vertex_count() << "," << f.problem << "," << res.value << "," << wit
              << "\n";
  } else {
    std::cout << "value: " << res.value << "\n";
    std::cout << "witness:";
    for (int v : res.witness) std::cout << " " << v;
    std::cout << "\n";
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------

int cmd_verify(const CommonFlags& f, const std::string& suite, const std::string& set,
               const std::string& eps_grid) {
  cb::SuiteOptions opts;
  opts.seed = f.seed;
  opts.jobs = f.jobs;
  opts.family_cap = family_cap();
  opts.solve = f.solve_options();
  opts.instance_set = set;
  if (f.r > 0.0) opts.r = f.r;
  if (!eps_grid.empty()) {
    auto parts = split(eps_grid, ':');
    if (parts.size() != 3) throw InputError("--eps-grid wants lo:hi:steps");
    opts.eps_lo = parse_double(parts[0], "eps-grid lo");
    opts.eps_hi = parse_double(parts[1], "eps-grid hi");
    opts.eps_points = static_cast<int>(parse_long(parts[2], "eps-grid steps"));
  }
  cb::SuiteReport rep = cb::run_suite(suite, opts);

  if (f.format == "json") {
    ordered_json j;
    j["schema_version"] = "1";
    j["suite"] = rep.suite;
    j["instance_set"] = rep.instance_set;
    j["pass"] = rep.pass;
    j["worst_slack"] = rep.worst_slack;
    j["counterexample"] = rep.counterexample;
    ordered_json cases = ordered_json::array();
    for (const auto& c : rep.cases) {
      cases.push_back({{"instance", c.instance},
                       {"lhs", c.lhs},
                       {"rhs", c.rhs},
                       {"slack", c.slack},
                       {"pass", c.pass},
                       {"note", c.note}});
    }
    j["cases"] = cases;
    std::cout << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    std::cout << "suite,instance_set,instance,lhs,rhs,slack,pass,note\n";
    for (const auto& c : rep.cases) {
      std::cout << rep.suite << "," << rep.instance_set << "," << c.instance << ","
                << fmt(c.lhs) << "," << fmt(c.rhs) << "," << fmt(c.slack) << ","
                << (c.pass ? "1" : "0") << "," << c.note << "\n";
    }
  } else {
    std::cout << "suite: " << rep.suite << "\n";
    std::cout << "set: " << rep.instance_set << "\n";
    std::cout << "result: " << (rep.pass ? "PASS" : "FAIL") << "\n";
    std::cout << "worst_slack: " << fmt(rep.worst_slack) << "\n";
    if (!rep.counterexample.empty())
      std::cout << "counterexample: " << rep.counterexample << "\n";
    std::cout << "cases: " << rep.cases.size() << "\n";
    for (const auto& c : rep.cases) {
      std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.instance
                << " slack=" << fmt(c.slack);
      if (!c.note.empty()) std::cout << " " << c.note;
      std::cout << "\n";
    }
  }
  return rep.pass ? 0 : 3;
}

// ---- sweep-eps ------------------------------------------------------------

int cmd_sweep_eps(const CommonFlags& f, const std::string& eps_grid) {
  check_level_cap(f.level, f.allow_high_level);
  Source src = load_source(f.generate, f.input, f.metric, f.seed);
  if (!src.is_metric()) throw InputError("sweep-eps needs a metric instance");
  if (!(f.r > 0.0)) throw InputError("sweep-eps requires --r > 0");
  if (eps_grid.empty()) throw InputError("sweep-eps requires --eps-grid lo:hi:steps");
  auto parts = split(eps_grid, ':');
  if (parts.size() != 3) throw InputError("--eps-grid wants lo:hi:steps");
  double lo = parse_double(parts[0], "eps-grid lo");
  double hi = parse_double(parts[1], "eps-grid hi");
  int steps = static_cast<int>(parse_long(parts[2], "eps-grid steps"));

  cb::BoundRequest base;
  base.level = f.level;
  base.solve = f.solve_options();
  base.family_cap = family_cap();
  cb::SweepResult sweep = cb::sweep_eps(src.metric(), f.r, lo, hi, steps, base, f.jobs);

  int exit_code = 0;
  for (const auto& pt : sweep.points) {
    exit_code = std::max(exit_code, status_exit_code(pt.report.status));
  }

  if (f.format == "json") {
    ordered_json j;
    j["schema_version"] = "1";
    ordered_json pts = ordered_json::array();
    for (const auto& pt : sweep.points) {
      ordered_json e;
      e["eps"] = pt.eps;
      e["report"] = report_json(pt.report);
      pts.push_back(std::move(e));
    }
    j["points"] = pts;
    j["trend"] = sweep.trend;
    j["min_bound"] = sweep.min_bound;
    j["max_bound"] = sweep.max_bound;
    std::cout << j.dump(2) << "\n";
  } else if (f.format == "csv") {
    std::cout << "eps," << kReportCsvHeader << "\n";
    for (const auto& pt : sweep.points) {
      std::cout << fmt(pt.eps) << "," << report_csv_row(pt.report) << "\n";
    }
    std::cout << "# trend=" << sweep.trend << " min_bound=" << fmt(sweep.min_bound)
              << " max_bound=" << fmt(sweep.max_bound) << "\n";
  } else {
    for (const auto& pt : sweep.points) {
      std::cout << "eps=" << fmt(pt.eps) << " bound=" << fmt(pt.report.bound)
                << " status=" << pt.report.status << " certified="
                << (pt.report.certified_lower_bound
                        ? fmt(*pt.report.certified_lower_bound)
                        : std::string("-"))
                << "\n";
    }
    std::cout << "trend: " << sweep.trend << " (min=" << fmt(sweep.min_bound)
              << " max=" << fmt(sweep.max_bound) << ")\n";
  }
  return exit_code;
}

// ---- generate -------------------------------------------------------------

int cmd_generate(const CommonFlags& f, const std::string& spec,
                 const std::string& out_path) {
  Source src = generate_instance(spec, f.seed);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw InputError("cannot open output file " + out_path);
    os = &file;
  }
  if (src.is_metric()) {
    cb::write_distance_csv(src.metric(), *os);
  } else {
    cb::write_dimacs(src.graph(), *os);
  }
  if (!out_path.empty())
    std::cerr << "wrote " << (src.is_metric() ? "distance CSV" : "DIMACS") << " to "
              << out_path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified bounds for covering and packing problems"};
  app.require_subcommand(1);

  CommonFlags f;
  std::string dump_sdpa, out_path, suite, set_name, eps_grid, gen_spec;

  CLI::App* bound = app.add_subcommand("bound", "solve one hierarchy step");
  add_source_flags(bound, f);
  bound->add_option("--problem", f.problem, "cover | pack | cover_separated");
  bound->add_option("--level", f.level, "hierarchy step t");
  bound->add_flag("--allow-high-level", f.allow_high_level,
                  "permit levels above the default cap");
  bound->add_option("--r", f.r, "covering radius (metric instances)");
  bound->add_option("--eps", f.eps, "separation threshold (metric instances)");
  bound->add_option("--format", f.format, "json | csv | text");
  bound->add_option("--seed", f.seed, "seed for seeded generators");
  bound->add_option("--dump-sdpa", dump_sdpa, "write the assembled SDP in sparse SDPA form");
  bound->add_option("--out", out_path, "write the report here instead of stdout");
  add_solver_flags(bound, f);

  CLI::App* exact = app.add_subcommand("exact", "brute-force oracle value");
  add_source_flags(exact, f);
  exact->add_option("--problem", f.problem, "cover | pack");
  exact->add_option("--r", f.r, "covering radius (metric instances)");
  exact->add_option("--format", f.format, "json | csv | text");
  exact->add_option("--seed", f.seed, "seed for seeded generators");

  CLI::App* verify = app.add_subcommand("verify", "run a named verification suite");
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--set", set_name, "named instance set");
  verify->add_option("--seed", f.seed, "instance-stream seed");
  verify->add_option("--jobs", f.jobs, "worker threads (0 = logical cores)");
  verify->add_option("--format", f.format, "json | csv | text");
  verify->add_option("--r", f.r, "radius for eps_sweep");
  verify->add_option("--eps-grid", eps_grid, "lo:hi:steps for eps_sweep");
  add_solver_flags(verify, f);

  CLI::App* sweep = app.add_subcommand("sweep-eps", "bound across a separation grid");
  add_source_flags(sweep, f);
  sweep->add_option("--r", f.r, "covering radius")->required();
  sweep->add_option("--eps-grid", eps_grid, "lo:hi:steps")->required();
  sweep->add_option("--level", f.level, "hierarchy step t");
  sweep->add_flag("--allow-high-level", f.allow_high_level,
                  "permit levels above the default cap");
  sweep->add_option("--format", f.format, "json | csv | text");
  sweep->add_option("--seed", f.seed, "seed for seeded generators");
  sweep->add_option("--jobs", f.jobs, "worker threads (0 = logical cores)");
  add_solver_flags(sweep, f);

  CLI::App* gen = app.add_subcommand("generate", "write an instance to a file");
  gen->add_option("spec", gen_spec, "generator spec kind:p1:p2")->required();
  gen->add_option("--out", out_path, "output path (default stdout)");
  gen->add_option("--seed", f.seed, "seed for seeded generators");

  CLI11_PARSE(app, argc, argv);

  try {
    if (f.format != "json" && f.format != "csv" && f.format != "text")
      throw InputError("unknown format '" + f.format + "'; known: json csv text");
    if (bound->parsed()) return cmd_bound(f, dump_sdpa, out_path);
    if (exact->parsed()) return cmd_exact(f);
    if (verify->parsed()) return cmd_verify(f, suite, set_name, eps_grid);
    if (sweep->parsed()) return cmd_sweep_eps(f, eps_grid);
    if (gen->parsed()) return cmd_generate(f, gen_spec, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
