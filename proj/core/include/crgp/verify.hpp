#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "crgp/constraints.hpp"
#include "crgp/graph.hpp"

namespace crgp {

struct EquivalenceReport {
  std::uint64_t graphs = 0;
  std::uint64_t queries = 0;
  std::uint64_t disagreements = 0;
  std::vector<std::string> examples;  // first few disagreements
};

/// Every labeled graph X on at most max_n vertices and every edge e of X with
/// X - e in the class: the oracle's decision for e against X - e must match
/// forbidden-minor membership of X. This covers every (member, non-edge) pair
/// exactly once. Both the stateless oracle and the incremental one are queried.
EquivalenceReport exhaustive_equivalence(GraphClass cls, Vertex max_n = 6);

/// Same comparison on `count` random graphs with exactly n vertices.
EquivalenceReport sampled_equivalence(GraphClass cls, Vertex n, std::size_t count,
                                      std::uint64_t seed);

struct SuiteReport {
  std::uint64_t cases = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> examples;
};

/// Decomposition guarantees on random connected weighted graphs (n <= max_n),
/// a swept over a grid.
SuiteReport decomposition_suite(std::size_t count, Vertex max_n, std::uint64_t seed);

/// Turan gap against the exact partition optimum for random weight vectors
/// with n <= max_n (at most 8), every l in 2..n. Also checks the partition
/// identity at the optimum and, for n <= 5, the partition reduction against
/// exhaustive subgraph search.
SuiteReport turan_suite(std::size_t count, Vertex max_n, std::uint64_t seed);

using OracleFactory = std::function<std::unique_ptr<ConstraintOracle>(GraphClass)>;

struct VerifyOptions {
  std::vector<Vertex> ns = {200, 2000};
  std::vector<GraphClass> classes = constrained_classes();
  std::uint64_t seed = 1;
  int runs_per_cell = 3;
  Vertex equivalence_max_n = 6;
  std::size_t decomposition_graphs = 1000;
  std::size_t turan_samples = 1000;
  std::size_t axiom_samples = 300;
  OracleFactory oracle_factory;  // defaults to make_oracle
};

struct CheckResult {
  std::string name;
  bool passed = true;
  bool informational = false;
  std::string detail;
};

std::vector<CheckResult> run_verification(const VerifyOptions& opts);

}  // namespace crgp
