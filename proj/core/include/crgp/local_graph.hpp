#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "crgp/graph.hpp"

namespace crgp {

/// Compact 0-based simple graph used as scratch input for the class tests.
/// Adjacency is stored as CSR after finalize().
class LocalGraph {
 public:
  LocalGraph() = default;
  explicit LocalGraph(int n) { reset(n); }

  void reset(int n);
  int add_vertex() { return n_++; }
  void add_edge(int u, int v) { edges_.emplace_back(u, v); }
  void finalize();

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offset_[v], adj_.data() + offset_[v + 1]};
  }
  /// Edge id for each adjacency slot, parallel to neighbors().
  std::span<const int> incident(int v) const {
    return {eid_.data() + offset_[v], eid_.data() + offset_[v + 1]};
  }
  int degree(int v) const { return offset_[v + 1] - offset_[v]; }

  static LocalGraph from_graph(const Graph& g);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<int> offset_;
  std::vector<int> adj_;
  std::vector<int> eid_;
};

}  // namespace crgp
