#include "crgp/turan.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>

namespace crgp {

double complete_weight(const std::vector<double>& weights) {
  double sum = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    for (std::size_t j = i + 1; j < weights.size(); ++j) sum += weights[i] * weights[j];
  }
  return sum;
}

double turan_lower_bound(const std::vector<double>& weights, int l) {
  if (l < 2) throw std::invalid_argument("turan_lower_bound: l must be at least 2");
  if (weights.empty()) throw std::invalid_argument("turan_lower_bound: no weights");
  const double s = std::accumulate(weights.begin(), weights.end(), 0.0);
  const double m = *std::max_element(weights.begin(), weights.end());
  return s / 2.0 * (s / static_cast<double>(l - 1) - m);
}

double partition_identity_value(const std::vector<double>& weights,
                                 const std::vector<int>& blocks) {
  const int k = blocks.empty() ? 0 : *std::max_element(blocks.begin(), blocks.end()) + 1;
  std::vector<double> block_weight(k, 0.0);
  double s = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    block_weight[blocks[i]] += weights[i];
    s += weights[i];
  }
  double squares = 0;
  for (double w : block_weight) squares += w * w;
  return s * s / 2.0 - squares / 2.0;
}

PartitionOptimum bruteforce_max_weight_clique_free(const std::vector<double>& weights, int l) {
  const std::size_t n = weights.size();
  if (n > 8) throw TuranSizeError("bruteforce_max_weight_clique_free: at most 8 weights");
  if (l < 2) throw std::invalid_argument("bruteforce_max_weight_clique_free: l must be at least 2");
  PartitionOptimum best;
  if (n == 0) return best;
  const int max_blocks = l - 1;
  std::vector<int> rgs(n, 0);
  std::vector<int> prefix_max(n, 0);  // largest block label among rgs[0..i]
  best.blocks = rgs;
  best.value = -1;
  for (;;) {
    double value = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (rgs[i] != rgs[j]) value += weights[i] * weights[j];
      }
    }
    if (value > best.value) {
      best.value = value;
      best.blocks = rgs;
    }
    // next restricted-growth string with labels below max_blocks
    std::size_t i = n;
    while (i-- > 1) {
      if (rgs[i] <= prefix_max[i - 1] && rgs[i] + 1 < max_blocks) break;
    }
    if (i == 0) break;
    ++rgs[i];
    prefix_max[i] = std::max(prefix_max[i - 1], rgs[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      rgs[j] = 0;
      prefix_max[j] = prefix_max[i];
    }
  }
  return best;
}

double bruteforce_subgraph_max(const std::vector<double>& weights, int l) {
  const int n = static_cast<int>(weights.size());
  if (n > 6) throw TuranSizeError("bruteforce_subgraph_max: at most 6 weights");
  if (l < 2) throw std::invalid_argument("bruteforce_subgraph_max: l must be at least 2");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int p = static_cast<int>(pairs.size());
  // vertex subsets of size l, as bitmasks
  std::vector<std::uint32_t> cliques;
  if (l <= n) {
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
      if (std::popcount(s) == l) cliques.push_back(s);
    }
  }
  double best = 0;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    std::uint32_t adj[6] = {0, 0, 0, 0, 0, 0};
    double value = 0;
    for (int e = 0; e < p; ++e) {
      if (mask & (1u << e)) {
        adj[pairs[e].first] |= 1u << pairs[e].second;
        adj[pairs[e].second] |= 1u << pairs[e].first;
        value += weights[pairs[e].first] * weights[pairs[e].second];
      }
    }
    if (value <= best) continue;
    bool has_clique = false;
    for (std::uint32_t s : cliques) {
      bool all = true;
      for (int v = 0; v < n && all; ++v) {
        if ((s >> v) & 1u) all = (adj[v] & s) == (s & ~(1u << v));
      }
      if (all) {
        has_clique = true;
        break;
      }
    }
    if (!has_clique) best = value;
  }
  return best;
}

}  // namespace crgp
