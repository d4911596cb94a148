#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "crgp/constraints.hpp"
#include "crgp/graph.hpp"
#include "crgp/local_graph.hpp"

namespace crgp {

/// Per-run constraint state: owns the evolving graph and its component
/// tracker, and answers "is G + uv still in the class?" on a reduced graph.
///
/// All classes handled here are characterized by 2-connected forbidden minors
/// whose membership is invariant under subdividing or unsubdividing edges.
/// So only the 2-core of the touched component matters, with pendant trees
/// collapsed onto their core attachment vertex and maximal chains of
/// core-degree-2 vertices contracted. The reduced graph ("kernel") of each
/// non-tree component is cached and rebuilt lazily after the component's core
/// may have changed.
class IncrementalOracle {
 public:
  IncrementalOracle(const ConstraintOracle& oracle, Vertex n);
  IncrementalOracle(const ConstraintOracle& oracle, const Graph& initial);

  const Graph& graph() const { return graph_; }
  const ComponentTracker& tracker() const { return tracker_; }
  const ConstraintOracle& oracle() const { return *oracle_; }

  /// Decision for the non-edge uv against the current graph. Throws
  /// EdgePresentError if uv is already an edge.
  Decision allows(Vertex u, Vertex v);

  /// Adds uv to the graph (no class check).
  void add_edge(Vertex u, Vertex v);

  /// Exact number of forbidden non-edges of the current graph.
  std::size_t count_forbidden();

  std::size_t kernel_rebuilds() const { return rebuilds_; }
  std::size_t full_tests() const { return full_tests_; }

 private:
  struct Kernel {
    std::vector<Vertex> core;    // 2-core vertices of the component
    std::vector<Vertex> branch;  // kernel vertices
    std::vector<int> chain_a;    // branch index of each chain end
    std::vector<int> chain_b;
    std::vector<int> chain_len;  // edges along the chain
    // Simple skeleton for classes whose forbidden minors have minimum degree
    // >= 3: each open chain becomes one edge, parallels merged, loops dropped.
    std::vector<std::pair<int, int>> simple;
    std::vector<int> simple_mult;
    std::vector<int> chain_simple;  // index into `simple`, -1 for closed chains
    // Blocks of the kernel multigraph. Membership is decided block by block,
    // so a query only needs the blocks on the block-cut path between its ends.
    std::vector<int> chain_block;
    std::vector<std::vector<int>> block_chains;
    std::vector<std::vector<int>> block_simple;
    std::vector<std::vector<int>> block_cuts;     // cut branch vertices of each block
    std::vector<std::vector<int>> vertex_blocks;  // blocks at each branch vertex
  };

  struct Point {
    int branch = -1;  // branch index, or -1 for a chain-interior vertex
    int chain = -1;
    int pos = 0;      // position along chain (1..len-1)
  };

  Kernel& kernel_for(Vertex root, Vertex any);
  void rebuild(Kernel& k, Vertex any);
  /// Branch vertices and chains from k.core and the current core degrees.
  void index_core(Kernel& k);
  /// The edge uv closed a cycle inside a component with a kernel: the tree
  /// paths from u and v to the core join it.
  void grow_core(Kernel& k, Vertex u, Vertex v);
  void attach_subtree(Vertex start, Vertex core_vertex);
  Point locate(Vertex core_vertex) const;
  void build_query_graph(const Kernel& k, Vertex x, Vertex y, bool subdivide);
  void build_blocks(Kernel& k);
  void build_skeleton(Kernel& k);
  /// Fills sel_blocks_ with the blocks between the two points and resets the
  /// local numbering of branch vertices.
  void select_blocks(const Kernel& k, const Point& px, const Point& py);
  int local_id(int branch);
  /// Skeleton query graph; false if x and y are already adjacent in it, in
  /// which case the new edge cannot create a forbidden minor.
  bool build_skeleton_query(Kernel& k, Vertex x, Vertex y);
  /// Runs the class test for the pair of core points x, y.
  bool test_points(Kernel& k, Vertex x, Vertex y, bool subdivide);
  bool needs_full_test(Vertex u, Vertex v) const;
  bool full_test(Vertex u, Vertex v);
  void relabel_tree_side(Vertex tree_start, Vertex blocked, Vertex attach_to);

  const ConstraintOracle* oracle_;
  bool skeleton_ = false;
  Graph graph_;
  ComponentTracker tracker_;
  std::unordered_map<Vertex, Kernel> kernels_;  // by union-find root

  // per-vertex data, valid for vertices of components that have a kernel
  std::vector<Vertex> attach_;
  std::vector<Vertex> toward_;  // next vertex on the way to the core (0 on the core)
  std::vector<int> branch_index_;
  std::vector<int> chain_of_;
  std::vector<int> chain_pos_;

  // scratch
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<Vertex> queue_;
  std::vector<int> core_deg_;
  std::vector<char> in_core_;
  LocalGraph query_;
  std::vector<int> sel_blocks_;
  std::vector<int> bc_parent_;
  std::vector<std::uint32_t> bc_stamp_;
  std::vector<int> bc_queue_;
  std::vector<int> local_;
  std::vector<std::uint32_t> local_stamp_;
  std::uint32_t bc_epoch_ = 0;
  std::uint32_t local_epoch_ = 0;
  // block finding scratch
  std::vector<int> disc_;
  std::vector<int> low_;
  std::size_t rebuilds_ = 0;
  std::size_t full_tests_ = 0;
};

}  // namespace crgp
