#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "crgp/graph.hpp"

namespace crgp {

/// Connected graph with a positive weight per vertex (index v-1).
struct WeightedGraph {
  Graph base;
  std::vector<double> weight;

  double total() const;
  double max_weight() const;
};

struct Decomposition {
  std::vector<std::vector<Vertex>> parts;  // each ascending
  std::vector<double> part_weights;
  double leftover = 0;  // W(H) minus the weight covered by the parts
};

class DecompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Splits H into disjoint connected parts of weight in [a, a*max_degree + max_weight],
/// leaving less than `a` uncovered. Repeatedly runs a BFS from the lowest
/// remaining label (children in label order), computes the subtree weight W(x)
/// of every vertex, cuts off the subtree of the vertex with the smallest
/// W(x) >= a (ties: smallest label), and continues on what is left.
///
/// Throws DecompositionError if H is disconnected, a weight is not positive,
/// a <= 0, or the degree or weight bounds are exceeded.
Decomposition weighted_decomposition(const WeightedGraph& h, double a, std::size_t max_degree,
                                     double max_weight);

/// Violations of the three output guarantees (connected parts, weight window,
/// small leftover), plus disjointness and bookkeeping. Empty when all hold.
/// Weight comparisons allow a relative slack of 1e-9 for summation order.
std::vector<std::string> check_decomposition(const WeightedGraph& h, double a,
                                             std::size_t max_degree, double max_weight,
                                             const Decomposition& d);

}  // namespace crgp
