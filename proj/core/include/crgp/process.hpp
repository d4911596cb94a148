#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "crgp/constraints.hpp"
#include "crgp/edge_stream.hpp"
#include "crgp/graph.hpp"

namespace crgp {

/// Raised when a stop rule cannot be met: t > N, m0 above the class cap, or
/// the pair stream runs dry before m0 acceptances.
class InfeasibleStopError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct StopRule {
  enum class Kind { at_step, at_accepted, all_queried };
  Kind kind = Kind::all_queried;
  std::uint64_t value = 0;

  static StopRule at_step(std::uint64_t t) { return {Kind::at_step, t}; }
  static StopRule at_accepted(std::uint64_t m0) { return {Kind::at_accepted, m0}; }
  static StopRule all_queried() { return {Kind::all_queried, 0}; }
};

struct ProcessConfig {
  Vertex n = 1;
  GraphClass cls = GraphClass::planar;
  StopRule stop = StopRule::all_queried();
  std::uint64_t seed = 0;

  /// Ascending step counts t (or accepted counts m if `checkpoints_by_accepted`)
  /// at which a record is taken. The final state is always recorded too.
  std::vector<std::uint64_t> checkpoints;
  bool checkpoints_by_accepted = false;

  /// Maintain the unconstrained graph on the same pair sequence and check
  /// r <= ex(G(n,t)) after every step and equal component partitions at every
  /// record.
  bool track_er = false;

  /// Keep a copy of the process graph in each record when n <= snapshot_cap.
  bool store_snapshots = false;
  Vertex snapshot_cap = 10000;

  /// Exact forbidden-pair census at every record.
  bool census = false;

  /// Re-check class membership from scratch at every record (only n <= 200).
  bool verify_membership = true;

  /// With an at_accepted stop: end the run as soon as the graph is connected.
  /// The giant component can only grow, so its size at m0 is then n,
  /// provided the run would go on to reach m0.
  bool stop_when_connected = false;

  /// Use the excess shortcuts and the reduced-core oracle (off: naive path).
  bool use_shortcuts = true;
};

struct CheckpointRecord {
  std::uint64_t t = 0;
  std::uint64_t m = 0;
  std::uint64_t r = 0;
  std::size_t giant = 0;
  std::optional<std::size_t> er_excess;
  std::optional<std::uint64_t> forbidden;
  std::optional<Graph> snapshot;
};

struct InvariantReport {
  std::uint64_t steps_checked = 0;
  std::uint64_t excess_violations = 0;     // r(t) > ex(G(n,t))
  std::uint64_t partition_checks = 0;
  std::uint64_t partition_violations = 0;  // components of P(n,t) and G(n,t) differ
  std::uint64_t accounting_violations = 0;
  std::uint64_t membership_violations = 0;

  bool ok() const {
    return excess_violations == 0 && partition_violations == 0 && accounting_violations == 0 &&
           membership_violations == 0;
  }
};

struct ProcessTrace {
  Vertex n = 0;
  GraphClass cls = GraphClass::planar;
  std::uint64_t seed = 0;
  std::vector<CheckpointRecord> records;
  std::uint64_t queried = 0;
  std::uint64_t accepted = 0;
  /// S(m0): the step of the m0-th acceptance, for at_accepted stops that got there.
  std::optional<std::uint64_t> steps_to_accepted;
  bool stopped_connected = false;
  Graph final_graph;
  InvariantReport invariants;
};

/// Called once per query, before the graph changes. `inside_largest` tells
/// whether both endpoints lie in the current largest component.
using QueryObserver =
    std::function<void(std::uint64_t t, Edge e, bool inside_largest, Decision decision)>;

/// Throws InfeasibleStopError or std::invalid_argument on a bad configuration.
void validate(const ProcessConfig& cfg);

/// Pair stream mode used for a configuration.
StreamMode stream_mode(const ProcessConfig& cfg);

ProcessTrace run(const ProcessConfig& cfg, const QueryObserver& observer = {});

/// S(m0) for a configuration with an at_accepted stop.
std::uint64_t steps_until_accepted(const ProcessConfig& cfg);

/// Adds a uniformly random addable pair m0 times, starting from the empty
/// graph. Throws InfeasibleStopError if the graph saturates first.
Graph random_greedy(Vertex n, GraphClass cls, std::uint64_t m0, std::uint64_t seed);

struct Census {
  std::uint64_t forbidden = 0;
  std::uint64_t addable = 0;
  std::uint64_t edges = 0;
};

/// Exact count of forbidden and addable non-edges. The graph must be in the class.
Census count_forbidden_addable(const Graph& g, GraphClass cls);

struct QueryTable {
  std::uint64_t inside_rejected = 0;
  std::uint64_t inside_accepted = 0;
  std::uint64_t outside_rejected = 0;
  std::uint64_t outside_accepted = 0;
};

/// Runs the process up to step t_hi and tabulates the queries with
/// t_lo <= t <= t_hi by (inside the largest component?, accepted?).
QueryTable classify_queries(ProcessConfig cfg, std::uint64_t t_lo, std::uint64_t t_hi);

}  // namespace crgp
