#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace crgp {

class TuranSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weight of the complete graph: sum over pairs i<j of w_i w_j.
double complete_weight(const std::vector<double>& weights);

/// Guaranteed gap between w(K_n) and the heaviest K_l-free subgraph:
/// S/2 * (S/(l-1) - M), S the total and M the largest weight. Needs l >= 2.
double turan_lower_bound(const std::vector<double>& weights, int l);

struct PartitionOptimum {
  double value = 0;          // heaviest K_l-free subgraph weight
  std::vector<int> blocks;   // restricted-growth string of the maximizing partition
};

/// Exact maximum over partitions of the vertices into at most l-1 blocks of the
/// weight of the edges between blocks. Enumerates restricted-growth strings;
/// at most 8 weights.
PartitionOptimum bruteforce_max_weight_clique_free(const std::vector<double>& weights, int l);

/// Same maximum, but over every edge subset of K_n with no K_l subgraph.
/// Cross-check for the partition reduction; at most 6 weights.
double bruteforce_subgraph_max(const std::vector<double>& weights, int l);

/// S^2/2 - (1/2) sum over blocks of W(Q)^2 for a given partition.
double partition_identity_value(const std::vector<double>& weights, const std::vector<int>& blocks);

}  // namespace crgp
