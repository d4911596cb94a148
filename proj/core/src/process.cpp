#include "crgp/process.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "crgp/kernel_oracle.hpp"

namespace crgp {

void validate(const ProcessConfig& cfg) {
  if (cfg.n < 1) throw std::invalid_argument("process: n must be at least 1");
  if (!std::is_sorted(cfg.checkpoints.begin(), cfg.checkpoints.end())) {
    throw std::invalid_argument("process: checkpoints must be ascending");
  }
  const std::uint64_t total = pair_count(cfg.n);
  switch (cfg.stop.kind) {
    case StopRule::Kind::at_step:
      if (cfg.stop.value > total) {
        throw InfeasibleStopError("process: t = " + std::to_string(cfg.stop.value) +
                                  " exceeds the " + std::to_string(total) + " available pairs");
      }
      if (2 * cfg.stop.value > total && total > EdgeStream::kMaxMaterialized) {
        throw std::invalid_argument("process: t above N/2 needs a materialized pair list, n too large");
      }
      break;
    case StopRule::Kind::at_accepted: {
      const std::size_t cap = max_edges(cfg.cls, cfg.n);
      if (cfg.stop.value > cap) {
        throw InfeasibleStopError("process: m0 = " + std::to_string(cfg.stop.value) + " exceeds " +
                                  std::string(to_string(cfg.cls)) + " cap " + std::to_string(cap) +
                                  " on " + std::to_string(cfg.n) + " vertices");
      }
      break;
    }
    case StopRule::Kind::all_queried:
      if (total > EdgeStream::kMaxMaterialized) {
        throw std::invalid_argument("process: querying all pairs is limited to N <= 2^25");
      }
      break;
  }
  if (cfg.stop_when_connected && cfg.stop.kind != StopRule::Kind::at_accepted) {
    throw std::invalid_argument("process: stop_when_connected needs an at_accepted stop");
  }
}

StreamMode stream_mode(const ProcessConfig& cfg) {
  const std::uint64_t total = pair_count(cfg.n);
  if (cfg.stop.kind == StopRule::Kind::all_queried) return StreamMode::full;
  if (cfg.stop.kind == StopRule::Kind::at_step && 2 * cfg.stop.value > total) return StreamMode::full;
  return StreamMode::lazy;
}

namespace {

class Runner {
 public:
  Runner(const ProcessConfig& cfg, const QueryObserver& observer)
      : cfg_(cfg),
        observer_(observer),
        oracle_(make_oracle(cfg.cls, cfg.use_shortcuts)),
        io_(*oracle_, cfg.n),
        stream_(cfg.n, cfg.seed, stream_mode(cfg)) {
    if (cfg.track_er) er_.emplace(cfg.n);
    trace_.n = cfg.n;
    trace_.cls = cfg.cls;
    trace_.seed = cfg.seed;
  }

  ProcessTrace run() {
    std::size_t next_cp = 0;
    auto due = [&](std::uint64_t now) {
      bool hit = false;
      while (next_cp < cfg_.checkpoints.size() && cfg_.checkpoints[next_cp] <= now) {
        hit = hit || cfg_.checkpoints[next_cp] == now;
        ++next_cp;
      }
      return hit;
    };
    if (due(0)) record();

    while (!done()) {
      const auto e = stream_.next();
      if (!e) {
        if (cfg_.stop.kind == StopRule::Kind::at_accepted) {
          throw InfeasibleStopError("process: graph saturated after " + std::to_string(m_) +
                                    " edges, before reaching m0 = " +
                                    std::to_string(cfg_.stop.value));
        }
        break;
      }
      step(*e);
      if (cfg_.checkpoints_by_accepted ? (last_accepted_ && due(m_)) : due(t_)) record();
      if (cfg_.stop_when_connected && io_.tracker().component_count() == 1) {
        trace_.stopped_connected = true;
        break;
      }
    }
    if (trace_.records.empty() || trace_.records.back().t != t_) record();

    trace_.queried = t_;
    trace_.accepted = m_;
    trace_.final_graph = io_.graph();
    return std::move(trace_);
  }

 private:
  bool done() const {
    switch (cfg_.stop.kind) {
      case StopRule::Kind::at_step: return t_ >= cfg_.stop.value;
      case StopRule::Kind::at_accepted: return m_ >= cfg_.stop.value;
      case StopRule::Kind::all_queried: return false;
    }
    return true;
  }

  void step(Edge e) {
    ++t_;
    const auto& tracker = io_.tracker();
    const Decision d = io_.allows(e.u, e.v);
    if (observer_) {
      const bool inside = tracker.in_largest(e.u) && tracker.in_largest(e.v);
      observer_(t_, e, inside, d);
    }
    last_accepted_ = d == Decision::accept;
    if (last_accepted_) {
      io_.add_edge(e.u, e.v);
      ++m_;
      if (cfg_.stop.kind == StopRule::Kind::at_accepted && m_ == cfg_.stop.value) {
        trace_.steps_to_accepted = t_;
      }
    }
    auto& inv = trace_.invariants;
    if (io_.graph().size() != m_ || tracker.edge_count() != m_) ++inv.accounting_violations;
    if (er_) {
      er_->add_edge(e.u, e.v);
      ++inv.steps_checked;
      if (t_ - m_ > er_->excess()) ++inv.excess_violations;
      // cheap per-step proxy for the partition check done at each record
      if (er_->component_count() != tracker.component_count()) ++inv.partition_violations;
    }
  }

  void record() {
    CheckpointRecord rec;
    rec.t = t_;
    rec.m = m_;
    rec.r = t_ - m_;
    rec.giant = io_.tracker().largest_size();
    auto& inv = trace_.invariants;
    if (er_) {
      rec.er_excess = er_->excess();
      ++inv.partition_checks;
      if (io_.tracker().partition_labels() != er_->partition_labels()) ++inv.partition_violations;
    }
    if (cfg_.census) rec.forbidden = io_.count_forbidden();
    if (cfg_.store_snapshots && cfg_.n <= cfg_.snapshot_cap) rec.snapshot = io_.graph();
    if (cfg_.verify_membership && cfg_.n <= 200 && !oracle_->is_member(io_.graph())) {
      ++inv.membership_violations;
    }
    if (!trace_.records.empty()) {
      const auto& prev = trace_.records.back();
      if (rec.m < prev.m || rec.r < prev.r) ++inv.accounting_violations;
    }
    trace_.records.push_back(std::move(rec));
  }

  const ProcessConfig& cfg_;
  const QueryObserver& observer_;
  std::unique_ptr<ConstraintOracle> oracle_;
  IncrementalOracle io_;
  EdgeStream stream_;
  std::optional<ComponentTracker> er_;
  ProcessTrace trace_;
  std::uint64_t t_ = 0;
  std::uint64_t m_ = 0;
  bool last_accepted_ = false;
};

}  // namespace

ProcessTrace run(const ProcessConfig& cfg, const QueryObserver& observer) {
  validate(cfg);
  Runner runner(cfg, observer);
  return runner.run();
}

std::uint64_t steps_until_accepted(const ProcessConfig& cfg) {
  if (cfg.stop.kind != StopRule::Kind::at_accepted) {
    throw std::invalid_argument("steps_until_accepted: needs an at_accepted stop");
  }
  ProcessConfig c = cfg;
  c.stop_when_connected = false;
  const ProcessTrace trace = run(c);
  return trace.steps_to_accepted.value_or(0);
}

Graph random_greedy(Vertex n, GraphClass cls, std::uint64_t m0, std::uint64_t seed) {
  if (m0 > max_edges(cls, n)) {
    throw InfeasibleStopError("random_greedy: m0 = " + std::to_string(m0) + " above the class cap");
  }
  const auto oracle = make_oracle(cls);
  IncrementalOracle io(*oracle, n);
  Rng rng(seed);
  const std::uint64_t total = pair_count(n);
  // Rejection is hereditary, so a pair found forbidden once stays forbidden.
  std::unordered_set<std::uint64_t> forbidden;
  auto key = [n](Edge e) { return static_cast<std::uint64_t>(e.u) * (n + 1ull) + e.v; };
  while (io.graph().size() < m0) {
    if (io.graph().size() + forbidden.size() >= total) {
      throw InfeasibleStopError("random_greedy: no addable pair left after " +
                                std::to_string(io.graph().size()) + " edges");
    }
    const auto u = static_cast<Vertex>(1 + rng.below(n));
    const auto v = static_cast<Vertex>(1 + rng.below(n));
    if (u == v) continue;
    const Edge e = make_edge(u, v);
    if (io.graph().has_edge(e.u, e.v) || forbidden.contains(key(e))) continue;
    if (io.allows(e.u, e.v) == Decision::accept) {
      io.add_edge(e.u, e.v);
    } else {
      forbidden.insert(key(e));
    }
  }
  return io.graph();
}

Census count_forbidden_addable(const Graph& g, GraphClass cls) {
  const auto oracle = make_oracle(cls);
  IncrementalOracle io(*oracle, g);
  Census c;
  c.edges = g.size();
  c.forbidden = io.count_forbidden();
  c.addable = pair_count(g.order()) - c.forbidden - c.edges;
  return c;
}

QueryTable classify_queries(ProcessConfig cfg, std::uint64_t t_lo, std::uint64_t t_hi) {
  if (t_lo < 1 || t_lo > t_hi) throw std::invalid_argument("classify_queries: bad window");
  cfg.stop = StopRule::at_step(t_hi);
  cfg.stop_when_connected = false;
  QueryTable table;
  const QueryObserver observer = [&](std::uint64_t t, Edge, bool inside, Decision d) {
    if (t < t_lo) return;
    const bool acc = d == Decision::accept;
    if (inside) {
      ++(acc ? table.inside_accepted : table.inside_rejected);
    } else {
      ++(acc ? table.outside_accepted : table.outside_rejected);
    }
  };
  run(cfg, observer);
  return table;
}

}  // namespace crgp
