// crgp: command-line front end for the constrained random graph process.
//
// Exit codes: 0 success, 1 invariant failure, 2 configuration error.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "crgp/analytic.hpp"
#include "crgp/constraints.hpp"
#include "crgp/csv.hpp"
#include "crgp/harness.hpp"
#include "crgp/process.hpp"
#include "crgp/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kConfigError = 2;

struct Global {
  std::uint64_t seed = 1;
  std::string cls = "planar";
  std::string out;
  unsigned jobs = crgp::harness::default_jobs();
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw std::invalid_argument("cannot open output file " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

crgp::GraphClass parse_class(const std::string& name) {
  if (auto cls = crgp::parse_graph_class(name)) return *cls;
  throw std::invalid_argument("unknown class '" + name + "'");
}

int run_analytic(const Global& g, double c_min, double c_max, double step) {
  Output out(g.out);
  crgp::harness::write_analytic(out.stream(), c_min, c_max, step);
  return kOk;
}

struct RunArgs {
  crgp::Vertex n = 1000;
  std::optional<std::uint64_t> t;
  std::optional<std::uint64_t> m0;
  bool all = false;
  std::vector<std::uint64_t> checkpoints;
  std::uint64_t every = 0;
  bool by_accepted = false;
  bool track_er = false;
  std::string dump_graph;
};

int run_process(const Global& g, const RunArgs& a) {
  crgp::ProcessConfig cfg;
  cfg.n = a.n;
  cfg.cls = parse_class(g.cls);
  cfg.seed = g.seed;
  cfg.track_er = a.track_er;
  cfg.checkpoints_by_accepted = a.by_accepted;
  const int stops = (a.t ? 1 : 0) + (a.m0 ? 1 : 0) + (a.all ? 1 : 0);
  if (stops != 1) throw std::invalid_argument("run: give exactly one of --t, --m0, --all");
  if (a.t) cfg.stop = crgp::StopRule::at_step(*a.t);
  if (a.m0) cfg.stop = crgp::StopRule::at_accepted(*a.m0);
  if (a.all) cfg.stop = crgp::StopRule::all_queried();
  cfg.checkpoints = a.checkpoints;
  if (a.every > 0) {
    const std::uint64_t end = a.t ? *a.t : a.m0 ? *a.m0 : crgp::pair_count(a.n);
    for (std::uint64_t x = a.every; x <= end; x += a.every) cfg.checkpoints.push_back(x);
    std::sort(cfg.checkpoints.begin(), cfg.checkpoints.end());
  }
  const crgp::ProcessTrace trace = crgp::run(cfg);
  Output out(g.out);
  out.stream() << crgp::csv::kTraceHeader << '\n';
  crgp::csv::write_trace(out.stream(), trace);
  if (!a.dump_graph.empty()) {
    std::ofstream dump(a.dump_graph, std::ios::binary);
    if (!dump) throw std::invalid_argument("cannot open " + a.dump_graph);
    crgp::write_edge_list(dump, trace.final_graph);
  }
  if (trace.steps_to_accepted) std::cerr << "S(m0) = " << *trace.steps_to_accepted << '\n';
  if (!trace.invariants.ok()) {
    const auto& inv = trace.invariants;
    std::cerr << "invariant failure: excess " << inv.excess_violations << ", partition "
              << inv.partition_violations << ", accounting " << inv.accounting_violations
              << ", membership " << inv.membership_violations << '\n';
    return kInvariantFailure;
  }
  return kOk;
}

struct SweepArgs {
  std::vector<crgp::Vertex> ns;
  std::vector<double> cs;
  std::string mode = "step";
  int replicates = 10;
  std::string replicate_out;
};

int run_sweep(const Global& g, const SweepArgs& a) {
  crgp::harness::SweepConfig cfg;
  cfg.ns = a.ns;
  cfg.cs = a.cs;
  if (a.mode == "step") {
    cfg.mode = crgp::harness::SweepMode::step;
  } else if (a.mode == "accepted") {
    cfg.mode = crgp::harness::SweepMode::accepted;
  } else {
    throw std::invalid_argument("sweep: --mode must be step or accepted");
  }
  cfg.replicates = a.replicates;
  cfg.master_seed = g.seed;
  cfg.cls = parse_class(g.cls);
  cfg.jobs = g.jobs;
  const auto result = crgp::harness::run_sweep(cfg);
  Output out(g.out);
  crgp::harness::write_sweep(out.stream(), cfg, result);
  if (!a.replicate_out.empty()) {
    Output reps(a.replicate_out);
    crgp::harness::write_replicates(reps.stream(), cfg, result);
  }
  for (const auto& cell : result.cells) {
    if (cell.failures > 0) {
      std::cerr << "cell n=" << cell.n << " c=" << cell.c << ": " << cell.failures
                << " failed replicates (" << cell.first_error << ")\n";
    }
  }
  return kOk;
}

int run_forbidden(const Global& g, crgp::Vertex n, const std::vector<std::uint64_t>& ts, int reps,
                  crgp::Vertex cap) {
  crgp::harness::CensusOptions opts;
  opts.n = n;
  opts.cls = parse_class(g.cls);
  opts.ts = ts;
  std::sort(opts.ts.begin(), opts.ts.end());
  opts.replicates = reps;
  opts.seed = g.seed;
  opts.jobs = g.jobs;
  opts.cap = cap;
  const auto rows = crgp::harness::run_census(opts);
  Output out(g.out);
  crgp::harness::write_census(out.stream(), opts, rows);
  for (std::uint64_t t : opts.ts) {
    const double c = 2.0 * static_cast<double>(t) / n;
    if (c > crgp::analytic::kMinDensity && opts.cls != crgp::GraphClass::unconstrained) {
      std::cerr << "t=" << t << ": predicted forbidden/(n^2/2) = "
                << crgp::analytic::predictions(c).forbidden_density << '\n';
    }
  }
  return kOk;
}

int run_classify(const Global& g, crgp::Vertex n, std::uint64_t lo, std::uint64_t hi, int reps) {
  crgp::harness::ClassifyOptions opts;
  opts.n = n;
  opts.cls = parse_class(g.cls);
  opts.t_lo = lo;
  opts.t_hi = hi;
  opts.replicates = reps;
  opts.seed = g.seed;
  opts.jobs = g.jobs;
  const auto rows = crgp::harness::run_classify(opts);
  Output out(g.out);
  crgp::harness::write_classify(out.stream(), opts, rows);
  return kOk;
}

int run_decompose(const Global& g, crgp::Vertex n, std::uint64_t t, double a) {
  crgp::harness::DecomposeOptions opts;
  opts.n = n;
  opts.cls = parse_class(g.cls);
  opts.t = t;
  opts.seed = g.seed;
  opts.a = a;
  const auto result = crgp::harness::run_decompose(opts);
  Output out(g.out);
  crgp::harness::write_parts(out.stream(), result);
  std::cerr << "giant " << result.giant << ", 2-core " << result.core_vertices << " vertices, max degree "
            << result.max_degree << ", max tree weight " << result.max_weight << ", a = " << result.a
            << ", parts " << result.parts.size() << ", leftover weight " << result.core_parts.leftover
            << '\n';
  for (const auto& issue : result.issues) std::cerr << "violation: " << issue << '\n';
  return result.issues.empty() ? kOk : kInvariantFailure;
}

int run_verify(const Global& g, bool class_given, const std::vector<crgp::Vertex>& ns, int runs,
               unsigned equivalence_n) {
  crgp::VerifyOptions opts;
  opts.seed = g.seed;
  opts.ns = ns;
  opts.runs_per_cell = runs;
  opts.equivalence_max_n = equivalence_n;
  if (class_given) opts.classes = {parse_class(g.cls)};
  if (equivalence_n > 7) throw std::invalid_argument("verify: --equivalence-n is limited to 7");
  const auto results = crgp::run_verification(opts);
  Output out(g.out);
  bool ok = true;
  for (const auto& r : results) {
    const char* status = r.informational ? "INFO" : r.passed ? "PASS" : "FAIL";
    out.stream() << status << "  " << r.name << "  (" << r.detail << ")\n";
    ok = ok && (r.passed || r.informational);
  }
  return ok ? kOk : kInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constrained random graph process for minor-closed classes"};
  app.require_subcommand(1);
  app.fallthrough();

  Global g;
  app.add_option("--seed", g.seed, "Master seed");
  auto* class_opt = app.add_option("--class", g.cls, "cactus | outerplanar | series-parallel | planar | none");
  app.add_option("--out", g.out, "Output path (default stdout)");
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);

  double c_min = 1.01, c_max = 5.0, c_step = 0.01;
  auto* analytic = app.add_subcommand("analytic", "Emit predicted curves on a grid of c");
  analytic->add_option("--c-min", c_min);
  analytic->add_option("--c-max", c_max);
  analytic->add_option("--step", c_step);

  RunArgs run_args;
  std::uint64_t t_arg = 0, m0_arg = 0;
  auto* run = app.add_subcommand("run", "Run the process once and write its trace");
  run->add_option("--n", run_args.n, "Vertex count")->required();
  auto* t_opt = run->add_option("--t", t_arg, "Stop after t queries");
  auto* m0_opt = run->add_option("--m0", m0_arg, "Stop after m0 accepted edges");
  run->add_flag("--all", run_args.all, "Query every pair");
  run->add_option("--checkpoints", run_args.checkpoints, "Record at these t (or m with --by-accepted)")
      ->delimiter(',');
  run->add_option("--every", run_args.every, "Record every k steps");
  run->add_flag("--by-accepted", run_args.by_accepted, "Checkpoints count accepted edges");
  run->add_flag("--track-er", run_args.track_er, "Track the unconstrained graph and check invariants");
  run->add_option("--dump-graph", run_args.dump_graph, "Write the final graph as an edge list");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Replicated runs over a grid of n and c");
  sweep->add_option("--n", sweep_args.ns)->required()->delimiter(',');
  sweep->add_option("--c", sweep_args.cs)->required()->delimiter(',');
  sweep->add_option("--mode", sweep_args.mode, "step (t = cn/2) or accepted (m0 = cn/2)");
  sweep->add_option("--replicates", sweep_args.replicates);
  sweep->add_option("--replicates-out", sweep_args.replicate_out, "Per-replicate CSV");

  crgp::Vertex census_n = 0, census_cap = 4000;
  std::vector<std::uint64_t> census_t;
  int census_reps = 1;
  auto* forbidden = app.add_subcommand("forbidden", "Forbidden/addable census after t queries");
  forbidden->add_option("--n", census_n)->required();
  forbidden->add_option("--t", census_t)->required()->delimiter(',');
  forbidden->add_option("--replicates", census_reps);
  forbidden->add_option("--cap", census_cap, "Largest n allowed");

  crgp::Vertex cls_n = 0;
  std::uint64_t t_lo = 1, t_hi = 1;
  int cls_reps = 1;
  auto* classify = app.add_subcommand("classify", "Tabulate queries by giant membership and decision");
  classify->add_option("--n", cls_n)->required();
  classify->add_option("--t-lo", t_lo)->required();
  classify->add_option("--t-hi", t_hi)->required();
  classify->add_option("--replicates", cls_reps);

  crgp::Vertex dec_n = 0;
  std::uint64_t dec_t = 0;
  double dec_a = 0;
  auto* decompose = app.add_subcommand("decompose", "Split the giant's 2-core into weighted parts");
  decompose->add_option("--n", dec_n)->required();
  decompose->add_option("--t", dec_t)->required();
  decompose->add_option("--a", dec_a, "Part weight floor (default s/(3l))");

  std::vector<crgp::Vertex> verify_ns = {200, 2000};
  int verify_runs = 3;
  unsigned equivalence_n = 6;
  auto* verify = app.add_subcommand("verify", "Run the deterministic invariant suite");
  verify->add_option("--n", verify_ns)->delimiter(',');
  verify->add_option("--runs", verify_runs);
  verify->add_option("--equivalence-n", equivalence_n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kConfigError;
  }

  try {
    if (*t_opt) run_args.t = t_arg;
    if (*m0_opt) run_args.m0 = m0_arg;
    if (*analytic) return run_analytic(g, c_min, c_max, c_step);
    if (*run) return run_process(g, run_args);
    if (*sweep) return run_sweep(g, sweep_args);
    if (*forbidden) return run_forbidden(g, census_n, census_t, census_reps, census_cap);
    if (*classify) return run_classify(g, cls_n, t_lo, t_hi, cls_reps);
    if (*decompose) return run_decompose(g, dec_n, dec_t, dec_a);
    if (*verify) return run_verify(g, class_opt->count() > 0, verify_ns, verify_runs, equivalence_n);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariantFailure;
  }
  return kOk;
}
