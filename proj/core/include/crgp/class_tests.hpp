#pragma once

#include <vector>

#include "crgp/local_graph.hpp"

namespace crgp {

/// Left-right planarity test (Brandes' formulation of the de Fraysseix-Rosenstiehl
/// criterion). Keeps its scratch buffers between calls; not thread-safe.
class PlanarityTester {
 public:
  bool is_planar(const LocalGraph& g);

 private:
  struct Interval {
    int low = -1;
    int high = -1;
    bool empty() const { return low == -1 && high == -1; }
  };
  struct ConflictPair {
    long id = 0;
    Interval left;
    Interval right;
  };

  bool conflicting(const Interval& i, int edge) const {
    return !i.empty() && lowpt_[i.high] > lowpt_[edge];
  }
  int lowest(const ConflictPair& p) const;
  long top_id() const { return stack_.empty() ? -1 : stack_.back().id; }

  void orient(const LocalGraph& g);
  bool test_from(int root);
  bool add_constraints(int ei, int e);
  void remove_back_edges(int e);

  int n_ = 0;
  std::vector<int> height_, parent_edge_, iter_;
  std::vector<int> src_, dst_, lowpt_, lowpt2_, nesting_;
  std::vector<char> oriented_, skip_final_;
  std::vector<int> lowpt_edge_, ref_;
  std::vector<long> stack_bottom_;
  std::vector<int> out_offset_, out_edges_;
  std::vector<int> bucket_, by_nesting_, fill_;
  std::vector<int> roots_, dfs_;
  std::vector<ConflictPair> stack_;
  long next_id_ = 0;
};

/// Series-parallel (K4-minor-free) test by reduction: delete vertices of degree
/// <= 1, suppress degree-2 vertices, merge parallel edges. Accepts iff every
/// vertex is eliminated.
bool is_series_parallel(const LocalGraph& g);

/// Cactus test: every biconnected block is a single edge or a cycle (each
/// block vertex has block-degree exactly 2).
bool is_cactus(const LocalGraph& g);

/// Planar with an extra apex adjacent to all vertices.
bool is_outerplanar(const LocalGraph& g, PlanarityTester& tester);
bool is_outerplanar(const LocalGraph& g);

bool is_planar(const LocalGraph& g);

}  // namespace crgp
