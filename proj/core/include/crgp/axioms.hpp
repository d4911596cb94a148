#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "crgp/constraints.hpp"
#include "crgp/graph.hpp"

namespace crgp {

struct AxiomViolation {
  char axiom = '?';  // 'a'..'f'
  std::string detail;
};

struct AxiomReport {
  std::size_t graphs_checked = 0;
  std::vector<AxiomViolation> violations;
  /// The class rejected nothing. Expected for the unconstrained baseline,
  /// where it is reported but not counted as a failure.
  bool rejects_nothing = false;
  bool informational_a = false;

  bool ok() const { return violations.empty(); }
  std::size_t count(char axiom) const;
};

/// Simple graph obtained by contracting the edge uv (u kept, v removed,
/// labels above v shifted down by one).
Graph contract_edge(const Graph& g, Vertex u, Vertex v);

/// Random graphs on 1..max_n vertices with densities spread over [0,1].
std::vector<Graph> sample_graphs(std::size_t count, Vertex max_n, std::uint64_t seed);

/// Checks the class axioms on the sample: (a) something is rejected,
/// (b) edgeless graphs are members, (c) membership survives relabeling,
/// (d) members stay members after deleting or contracting any edge,
/// (e) pairs in different components are accepted, (f) pairs inside a tree
/// component are accepted.
AxiomReport axiom_check(const ConstraintOracle& oracle, const std::vector<Graph>& sample,
                        std::uint64_t seed);

}  // namespace crgp
