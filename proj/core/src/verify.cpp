#include "crgp/verify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "crgp/axioms.hpp"
#include "crgp/decomposition.hpp"
#include "crgp/edge_stream.hpp"
#include "crgp/kernel_oracle.hpp"
#include "crgp/minor.hpp"
#include "crgp/process.hpp"
#include "crgp/turan.hpp"

namespace crgp {
namespace {

constexpr std::size_t kMaxExamples = 5;

void note(std::vector<std::string>& examples, const std::string& s) {
  if (examples.size() < kMaxExamples) examples.push_back(s);
}

std::string edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order();
  for (const Edge& e : g.edges()) os << " " << e.u << "-" << e.v;
  return os.str();
}

/// Compares both oracle paths on every edge e of x, taking x - e as the base
/// graph. Bases outside the class are skipped: the oracle is only defined on
/// members.
void compare_on(const Graph& x, MinorMembership& minors, const ConstraintOracle& oracle,
                EquivalenceReport& report) {
  ++report.graphs;
  const bool member = minors.is_member(x);
  for (const Edge& e : x.edges()) {
    Graph base(x.order());
    for (const Edge& f : x.edges()) {
      if (f != e) base.add_edge(f.u, f.v);
    }
    if (!member && !minors.is_member(base)) continue;
    const ComponentTracker tracker = ComponentTracker::from_graph(base);
    const bool stateless = oracle.allows(base, tracker, e.u, e.v) == Decision::accept;
    IncrementalOracle io(oracle, base);
    const bool incremental = io.allows(e.u, e.v) == Decision::accept;
    ++report.queries;
    if (stateless != member || incremental != member) {
      ++report.disagreements;
      note(report.examples, "query " + std::to_string(e.u) + "-" + std::to_string(e.v) + " on " +
                                edge_list(base) + ": minors say " + (member ? "accept" : "reject"));
    }
  }
}

CheckResult named(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  return r;
}

}  // namespace

EquivalenceReport exhaustive_equivalence(GraphClass cls, Vertex max_n) {
  EquivalenceReport report;
  const auto oracle = make_oracle(cls);
  MinorMembership minors(cls);
  for (Vertex n = 1; n <= max_n; ++n) {
    std::vector<Edge> pairs;
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) pairs.push_back({u, v});
    }
    const std::uint64_t graphs = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
      Graph x(n);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (mask >> i & 1u) x.add_edge(pairs[i].u, pairs[i].v);
      }
      compare_on(x, minors, *oracle, report);
    }
  }
  return report;
}

EquivalenceReport sampled_equivalence(GraphClass cls, Vertex n, std::size_t count,
                                      std::uint64_t seed) {
  EquivalenceReport report;
  const auto oracle = make_oracle(cls);
  MinorMembership minors(cls);
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const double p = rng.uniform();
    Graph x(n);
    for (Vertex u = 1; u <= n; ++u) {
      for (Vertex v = u + 1; v <= n; ++v) {
        if (rng.uniform() < p) x.add_edge(u, v);
      }
    }
    compare_on(x, minors, *oracle, report);
  }
  return report;
}

SuiteReport decomposition_suite(std::size_t count, Vertex max_n, std::uint64_t seed) {
  SuiteReport report;
  Rng rng(seed);
  static constexpr double kA[] = {0.5, 1.0, 2.0, 5.0, 20.0, 100.0};
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<Vertex>(1 + rng.below(max_n));
    WeightedGraph h{Graph(n), std::vector<double>(n)};
    // random recursive tree plus a few extra edges keeps the graph connected
    for (Vertex v = 2; v <= n; ++v) h.base.add_edge(static_cast<Vertex>(1 + rng.below(v - 1)), v);
    const std::uint64_t extra = n > 1 ? rng.below(n) : 0;
    for (std::uint64_t k = 0; k < extra; ++k) {
      const auto u = static_cast<Vertex>(1 + rng.below(n));
      const auto v = static_cast<Vertex>(1 + rng.below(n));
      if (u != v && !h.base.has_edge(u, v)) h.base.add_edge(u, v);
    }
    for (auto& w : h.weight) w = 0.05 + 10.0 * rng.uniform();
    const double a = kA[i % std::size(kA)];
    const std::size_t delta = max_degree(h.base);
    const double m = h.max_weight();
    ++report.cases;
    const Decomposition d = weighted_decomposition(h, a, delta, m);
    const auto issues = check_decomposition(h, a, delta, m, d);
    if (!issues.empty()) {
      ++report.violations;
      note(report.examples, "n=" + std::to_string(n) + " a=" + std::to_string(a) + ": " + issues.front());
    }
  }
  return report;
}

SuiteReport turan_suite(std::size_t count, Vertex max_n, std::uint64_t seed) {
  SuiteReport report;
  Rng rng(seed);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(1 + rng.below(max_n));
    std::vector<double> w(n);
    for (auto& x : w) x = 0.1 + 5.0 * rng.uniform();
    const double full = complete_weight(w);
    const int top = static_cast<int>(std::max<std::size_t>(n, 2));
    for (int l = 2; l <= top; ++l) {
      ++report.cases;
      const PartitionOptimum opt = bruteforce_max_weight_clique_free(w, l);
      const double bound = turan_lower_bound(w, l);
      const double slack = 1e-9 * std::max(1.0, full);
      std::string issue;
      if (bound > full - opt.value + slack) issue = "bound exceeds the exact gap";
      if (std::abs(partition_identity_value(w, opt.blocks) - opt.value) > slack) {
        issue = "partition identity fails at the optimum";
      }
      if (n <= 5 && std::abs(bruteforce_subgraph_max(w, l) - opt.value) > slack) {
        issue = "partition optimum differs from the subgraph optimum";
      }
      if (!issue.empty()) {
        ++report.violations;
        note(report.examples, "n=" + std::to_string(n) + " l=" + std::to_string(l) + ": " + issue);
      }
    }
  }
  return report;
}

std::vector<CheckResult> run_verification(const VerifyOptions& opts) {
  std::vector<CheckResult> results;
  const OracleFactory factory =
      opts.oracle_factory ? opts.oracle_factory : [](GraphClass c) { return make_oracle(c); };
  std::uint64_t stream = 0;

  for (GraphClass cls : opts.classes) {
    for (Vertex n : opts.ns) {
      CheckResult r = named("process invariants " + std::string(to_string(cls)) + " n=" + std::to_string(n));
      std::uint64_t violations = 0;
      for (int k = 0; k < opts.runs_per_cell; ++k) {
        ProcessConfig cfg;
        cfg.n = n;
        cfg.cls = cls;
        cfg.stop = StopRule::at_step(std::min<std::uint64_t>(3ull * n, pair_count(n)));
        cfg.seed = split_seed(opts.seed, stream++);
        cfg.track_er = true;
        for (int j = 1; j <= 10; ++j) cfg.checkpoints.push_back(cfg.stop.value * j / 10);
        const ProcessTrace trace = run(cfg);
        const auto& inv = trace.invariants;
        violations += inv.excess_violations + inv.partition_violations +
                      inv.accounting_violations + inv.membership_violations;
      }
      r.passed = violations == 0;
      r.detail = std::to_string(opts.runs_per_cell) + " runs, " + std::to_string(violations) + " violations";
      results.push_back(std::move(r));
    }
  }

  for (GraphClass cls : opts.classes) {
    if (cls == GraphClass::unconstrained) continue;
    const EquivalenceReport eq = exhaustive_equivalence(cls, opts.equivalence_max_n);
    CheckResult r = named("oracle/minor equivalence " + std::string(to_string(cls)) + " n<=" +
                  std::to_string(opts.equivalence_max_n));
    r.passed = eq.disagreements == 0;
    r.detail = std::to_string(eq.queries) + " queries, " + std::to_string(eq.disagreements) + " disagreements";
    if (!eq.examples.empty()) r.detail += "; " + eq.examples.front();
    results.push_back(std::move(r));
  }

  {
    const SuiteReport d = decomposition_suite(opts.decomposition_graphs, 500, split_seed(opts.seed, stream++));
    CheckResult r = named("decomposition postconditions");
    r.passed = d.violations == 0;
    r.detail = std::to_string(d.cases) + " graphs, " + std::to_string(d.violations) + " violations";
    if (!d.examples.empty()) r.detail += "; " + d.examples.front();
    results.push_back(std::move(r));
  }
  {
    const SuiteReport t = turan_suite(opts.turan_samples, 6, split_seed(opts.seed, stream++));
    CheckResult r = named("turan inequality");
    r.passed = t.violations == 0;
    r.detail = std::to_string(t.cases) + " cases, " + std::to_string(t.violations) + " violations";
    if (!t.examples.empty()) r.detail += "; " + t.examples.front();
    results.push_back(std::move(r));
  }

  const auto sample = sample_graphs(opts.axiom_samples, 8, split_seed(opts.seed, stream++));
  for (GraphClass cls : opts.classes) {
    const auto oracle = factory(cls);
    const AxiomReport a = axiom_check(*oracle, sample, split_seed(opts.seed, stream++));
    CheckResult r = named("axioms " + std::string(to_string(cls)));
    r.passed = a.ok();
    std::ostringstream os;
    os << a.graphs_checked << " graphs";
    for (char ax : {'a', 'b', 'c', 'd', 'e', 'f'}) {
      if (const std::size_t c = a.count(ax)) os << ", axiom (" << ax << "): " << c << " violations";
    }
    if (!a.violations.empty()) os << "; " << a.violations.front().detail;
    r.detail = os.str();
    results.push_back(std::move(r));
    if (a.informational_a) {
      CheckResult info = named("axioms " + std::string(to_string(cls)) + " (a)");
      info.informational = true;
      info.detail = "nothing rejected: the class of all graphs";
      results.push_back(std::move(info));
    }
  }
  return results;
}

}  // namespace crgp
