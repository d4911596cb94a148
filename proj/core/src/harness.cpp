#include "crgp/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <ostream>
#include <thread>

#include "crgp/analytic.hpp"
#include "crgp/csv.hpp"
#include "crgp/edge_stream.hpp"

namespace crgp::harness {

double quantile(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) return 0;
  const double h = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

Stats summarize(std::vector<double> values) {
  Stats s;
  s.count = values.size();
  if (values.empty()) return s;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double sq = 0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(sq / static_cast<double>(values.size() - 1));
  }
  std::sort(values.begin(), values.end());
  s.q10 = quantile(values, 0.1);
  s.q50 = quantile(values, 0.5);
  s.q90 = quantile(values, 0.9);
  return s;
}

unsigned default_jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  const std::size_t workers = std::min<std::size_t>(std::max(1u, jobs), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        task(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

void write_analytic(std::ostream& os, double c_min, double c_max, double step) {
  if (!(c_min > 1.0) || !(c_max > c_min) || !(step > 0)) {
    throw analytic::DomainError("analytic grid needs 1 < c_min < c_max and step > 0");
  }
  os << csv::kAnalyticHeader << '\n';
  const auto count = static_cast<std::size_t>(std::floor((c_max - c_min) / step + 1e-9)) + 1;
  for (std::size_t k = 0; k < count; ++k) {
    const double c = c_min + static_cast<double>(k) * step;
    csv::write_analytic_row(os, analytic::predictions(c));
  }
}

std::string_view to_string(SweepMode mode) { return mode == SweepMode::step ? "step" : "accepted"; }

std::uint64_t replicate_seed(std::uint64_t master, std::size_t cell, int replicate) {
  return split_seed(split_seed(master, cell), static_cast<std::uint64_t>(replicate));
}

namespace {

std::uint64_t half_density(double c, Vertex n) {
  return static_cast<std::uint64_t>(std::llround(c * static_cast<double>(n) / 2.0));
}

}  // namespace

std::vector<CellSummary> aggregate(const SweepConfig& cfg, const std::vector<ReplicateRow>& rows) {
  std::vector<CellSummary> cells;
  for (Vertex n : cfg.ns) {
    for (double c : cfg.cs) {
      CellSummary cell;
      cell.n = n;
      cell.c = c;
      cell.target = half_density(c, n);
      cells.push_back(std::move(cell));
    }
  }
  std::vector<std::vector<double>> t(cells.size()), m(cells.size()), r(cells.size()),
      g(cells.size());
  for (const auto& row : rows) {
    auto& cell = cells[row.cell];
    if (!row.error.empty()) {
      if (cell.failures++ == 0) cell.first_error = row.error;
      continue;
    }
    t[row.cell].push_back(static_cast<double>(row.t));
    m[row.cell].push_back(static_cast<double>(row.m));
    r[row.cell].push_back(static_cast<double>(row.r));
    g[row.cell].push_back(static_cast<double>(row.giant));
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    cells[i].t = summarize(std::move(t[i]));
    cells[i].m = summarize(std::move(m[i]));
    cells[i].r = summarize(std::move(r[i]));
    cells[i].giant = summarize(std::move(g[i]));
  }
  return cells;
}

SweepResult run_sweep(const SweepConfig& cfg) {
  if (cfg.replicates < 1) throw std::invalid_argument("sweep: replicates must be at least 1");
  if (cfg.ns.empty() || cfg.cs.empty()) throw std::invalid_argument("sweep: empty grid");
  SweepResult result;
  const std::size_t cells = cfg.ns.size() * cfg.cs.size();
  const auto reps = static_cast<std::size_t>(cfg.replicates);
  result.rows.resize(cells * reps);
  parallel_for(result.rows.size(), cfg.jobs, [&](std::size_t k) {
    const std::size_t cell = k / reps;
    const int rep = static_cast<int>(k % reps);
    const Vertex n = cfg.ns[cell / cfg.cs.size()];
    const double c = cfg.cs[cell % cfg.cs.size()];
    ReplicateRow& row = result.rows[k];
    row.cell = cell;
    row.replicate = rep;
    row.seed = replicate_seed(cfg.master_seed, cell, rep);
    try {
      ProcessConfig pc;
      pc.n = n;
      pc.cls = cfg.cls;
      pc.seed = row.seed;
      const std::uint64_t target = half_density(c, n);
      pc.stop = cfg.mode == SweepMode::step ? StopRule::at_step(target) : StopRule::at_accepted(target);
      const ProcessTrace trace = run(pc);
      row.t = trace.queried;
      row.m = trace.accepted;
      row.r = trace.queried - trace.accepted;
      row.giant = trace.records.back().giant;
    } catch (const std::exception& e) {
      row.error = e.what();
    }
  });
  result.cells = aggregate(cfg, result.rows);
  return result;
}

namespace {

void write_stats(std::ostream& os, const Stats& s) {
  os << ',' << csv::number(s.mean) << ',' << csv::number(s.std) << ',' << csv::number(s.q10) << ','
     << csv::number(s.q50) << ',' << csv::number(s.q90);
}

std::string sanitize(std::string s) {
  std::replace(s.begin(), s.end(), ',', ';');
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

}  // namespace

void write_sweep(std::ostream& os, const SweepConfig& cfg, const SweepResult& result) {
  os << kSweepHeader << '\n';
  for (const auto& cell : result.cells) {
    os << crgp::to_string(cfg.cls) << ',' << to_string(cfg.mode) << ',' << cell.n << ','
       << csv::number(cell.c) << ',' << cell.target << ',' << cfg.replicates << ','
       << cell.failures;
    write_stats(os, cell.t);
    write_stats(os, cell.m);
    write_stats(os, cell.r);
    write_stats(os, cell.giant);
    os << '\n';
  }
}

void write_replicates(std::ostream& os, const SweepConfig& cfg, const SweepResult& result) {
  os << kReplicateHeader << '\n';
  for (const auto& row : result.rows) {
    const Vertex n = cfg.ns[row.cell / cfg.cs.size()];
    const double c = cfg.cs[row.cell % cfg.cs.size()];
    os << crgp::to_string(cfg.cls) << ',' << to_string(cfg.mode) << ',' << n << ','
       << csv::number(c) << ',' << row.replicate << ',' << row.seed << ',' << row.t << ','
       << row.m << ',' << row.r << ',' << row.giant << ',' << sanitize(row.error) << '\n';
  }
}

std::vector<CensusRow> run_census(const CensusOptions& opts) {
  if (opts.n > opts.cap) {
    throw std::invalid_argument("forbidden: n = " + std::to_string(opts.n) + " above the census cap " +
                                std::to_string(opts.cap));
  }
  if (opts.ts.empty()) throw std::invalid_argument("forbidden: no census step given");
  if (!std::is_sorted(opts.ts.begin(), opts.ts.end())) {
    throw std::invalid_argument("forbidden: census steps must be ascending");
  }
  if (opts.replicates < 1) throw std::invalid_argument("forbidden: replicates must be at least 1");
  const auto reps = static_cast<std::size_t>(opts.replicates);
  std::vector<std::vector<CensusRow>> per(reps);
  parallel_for(reps, opts.jobs, [&](std::size_t k) {
    ProcessConfig pc;
    pc.n = opts.n;
    pc.cls = opts.cls;
    pc.seed = split_seed(opts.seed, k);
    pc.stop = StopRule::at_step(opts.ts.back());
    pc.checkpoints = opts.ts;
    pc.census = true;
    const ProcessTrace trace = run(pc);
    for (const auto& rec : trace.records) {
      if (!std::binary_search(opts.ts.begin(), opts.ts.end(), rec.t)) continue;
      if (!per[k].empty() && per[k].back().t == rec.t) continue;
      const std::uint64_t forbidden = rec.forbidden.value_or(0);
      per[k].push_back({pc.seed, rec.t,
                        {forbidden, pair_count(opts.n) - forbidden - rec.m, rec.m}});
    }
  });
  std::vector<CensusRow> rows;
  for (auto& v : per) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

void write_census(std::ostream& os, const CensusOptions& opts, const std::vector<CensusRow>& rows) {
  os << csv::kCensusHeader << '\n';
  for (const auto& row : rows) csv::write_census_row(os, row.seed, opts.cls, opts.n, row.t, row.census);
}

std::vector<ClassifyRow> run_classify(const ClassifyOptions& opts) {
  if (opts.replicates < 1) throw std::invalid_argument("classify: replicates must be at least 1");
  std::vector<ClassifyRow> rows(static_cast<std::size_t>(opts.replicates));
  parallel_for(rows.size(), opts.jobs, [&](std::size_t k) {
    ProcessConfig pc;
    pc.n = opts.n;
    pc.cls = opts.cls;
    pc.seed = split_seed(opts.seed, k);
    rows[k].seed = pc.seed;
    rows[k].table = classify_queries(pc, opts.t_lo, opts.t_hi);
  });
  return rows;
}

void write_classify(std::ostream& os, const ClassifyOptions& opts,
                    const std::vector<ClassifyRow>& rows) {
  os << csv::kClassifyHeader << '\n';
  for (const auto& row : rows) {
    csv::write_classify_row(os, row.seed, opts.cls, opts.n, opts.t_lo, opts.t_hi, row.table);
  }
}

int excluded_clique(GraphClass cls) {
  switch (cls) {
    case GraphClass::planar: return 5;
    case GraphClass::series_parallel:
    case GraphClass::outerplanar:
    case GraphClass::cactus: return 4;  // K4 contains the diamond
    case GraphClass::unconstrained: break;
  }
  throw std::invalid_argument("decompose: the unconstrained class excludes no clique minor");
}

DecomposeResult run_decompose(const DecomposeOptions& opts) {
  ProcessConfig pc;
  pc.n = opts.n;
  pc.cls = opts.cls;
  pc.seed = opts.seed;
  pc.stop = StopRule::at_step(opts.t);
  const ProcessTrace trace = run(pc);

  DecomposeResult out;
  const ComponentInfo giant = largest_component(trace.final_graph);
  out.giant = giant.size;
  const Subgraph comp = induced_subgraph(trace.final_graph, giant.vertices);
  const PendantForest forest = pendant_tree_decomposition(comp.graph);

  std::vector<Vertex> core_vertices;
  for (Vertex v = 1; v <= comp.graph.order(); ++v) {
    if (forest.in_core[v - 1]) core_vertices.push_back(v);
  }
  const Subgraph core = induced_subgraph(comp.graph, core_vertices);
  WeightedGraph h{core.graph, std::vector<double>(core.graph.order())};
  for (Vertex i = 1; i <= core.graph.order(); ++i) {
    h.weight[i - 1] = static_cast<double>(forest.weight[core.original[i - 1] - 1]);
  }
  out.core_vertices = core.graph.order();
  out.max_degree = max_degree(h.base);
  out.max_weight = h.max_weight();

  const double s = static_cast<double>(opts.t) - static_cast<double>(opts.n) / 2.0;
  out.a = opts.a > 0 ? opts.a : s / (3.0 * excluded_clique(opts.cls));
  if (!(out.a > 0)) throw std::invalid_argument("decompose: t must exceed n/2 when a is not given");

  out.core_parts = weighted_decomposition(h, out.a, out.max_degree, out.max_weight);
  out.issues = check_decomposition(h, out.a, out.max_degree, out.max_weight, out.core_parts);

  // expand each core part to the pendant trees hanging off it
  std::vector<int> part_of_core(comp.graph.order() + 1, -1);
  for (std::size_t p = 0; p < out.core_parts.parts.size(); ++p) {
    for (Vertex i : out.core_parts.parts[p]) part_of_core[core.original[i - 1]] = static_cast<int>(p);
  }
  out.parts.resize(out.core_parts.parts.size());
  for (Vertex v = 1; v <= comp.graph.order(); ++v) {
    const int p = part_of_core[forest.tree_of[v - 1]];
    if (p >= 0) out.parts[p].push_back(comp.original[v - 1]);
  }
  for (auto& part : out.parts) std::sort(part.begin(), part.end());
  return out;
}

void write_parts(std::ostream& os, const DecomposeResult& result) {
  for (const auto& part : result.parts) {
    for (std::size_t i = 0; i < part.size(); ++i) os << (i ? " " : "") << part[i];
    os << '\n';
  }
}

}  // namespace crgp::harness
