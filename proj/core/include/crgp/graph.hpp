#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <vector>

namespace crgp {

/// Vertex labels are 1-based, matching the vertex set [n].
using Vertex = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Normalized edge with u < v.
inline Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 1..n with adjacency lists and the
/// edge list in insertion order.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);

  Vertex order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  /// Throws GraphError on self-loops, duplicates, or labels outside [1,n].
  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[v - 1]; }
  std::size_t degree(Vertex v) const { return adj_[v - 1].size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool contains(Vertex v) const { return v >= 1 && v <= n_; }

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  Vertex n_ = 0;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

/// Union-find over the vertex set with per-component vertex and edge counts.
/// Also keeps the excess m - n + (#tree components) and the largest component
/// (ties broken by the smallest minimum label) up to date.
class ComponentTracker {
 public:
  ComponentTracker() = default;
  explicit ComponentTracker(Vertex n);
  static ComponentTracker from_graph(const Graph& g);

  Vertex order() const { return static_cast<Vertex>(parent_.size()); }

  Vertex find(Vertex v) const;
  bool same_component(Vertex u, Vertex v) const { return find(u) == find(v); }

  std::size_t component_vertices(Vertex v) const { return vertices_[find(v) - 1]; }
  std::size_t component_edges(Vertex v) const { return edges_[find(v) - 1]; }
  Vertex component_min_label(Vertex v) const { return min_label_[find(v) - 1]; }
  bool is_tree_component(Vertex v) const {
    const Vertex r = find(v);
    return edges_[r - 1] + 1 == vertices_[r - 1];
  }

  /// Records the edge uv; returns true if it merged two components.
  bool add_edge(Vertex u, Vertex v);

  std::size_t component_count() const { return components_; }
  std::size_t tree_component_count() const { return tree_components_; }
  std::size_t edge_count() const { return edge_count_; }
  std::size_t excess() const { return excess_; }

  std::size_t largest_size() const { return largest_root_ ? vertices_[largest_root_ - 1] : 0; }
  Vertex largest_root() const { return largest_root_ ? find(largest_root_) : 0; }
  bool in_largest(Vertex v) const { return largest_root_ != 0 && find(v) == find(largest_root_); }

  /// Canonical component label per vertex: the minimum vertex label of its
  /// component. Index v-1.
  std::vector<Vertex> partition_labels() const;

 private:
  bool better(Vertex a, Vertex b) const;

  mutable std::vector<Vertex> parent_;
  std::vector<std::size_t> vertices_;
  std::vector<std::size_t> edges_;
  std::vector<Vertex> min_label_;
  std::size_t components_ = 0;
  std::size_t tree_components_ = 0;
  std::size_t edge_count_ = 0;
  std::size_t excess_ = 0;
  Vertex largest_root_ = 0;
};

/// ex(G) = m - n + (number of tree components), computed from scratch.
std::size_t excess(const Graph& g);

/// Vertices of the 2-core (index v-1), by queue-based peeling.
std::vector<bool> two_core_vertices(const Graph& g);

/// Maximal subgraph of minimum degree >= 2, on the same vertex labels
/// (vertices outside the core are isolated). Edgeless if no core exists.
Graph two_core(const Graph& g);

struct ComponentInfo {
  std::vector<Vertex> vertices;  // ascending
  std::size_t size = 0;
};

/// Largest component; among equal sizes the one with the smallest minimum label.
ComponentInfo largest_component(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Component label per vertex (index v-1): the minimum label in its component.
std::vector<Vertex> component_labels(const Graph& g);

/// Induced subgraph relabeled to 1..k, with the original label of each new vertex.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] is the label of vertex i+1
};

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);
Subgraph component_of(const Graph& g, Vertex v);

/// Pendant trees hanging off the 2-core of a connected non-tree graph.
struct PendantForest {
  std::vector<bool> in_core;    // index v-1
  Graph core;                   // same labels as the input
  std::vector<Vertex> tree_of;  // index v-1: the core vertex x with v in T_x
  std::vector<std::size_t> weight;  // index x-1: |V(T_x)| for core x, else 0
};

class InputIsTreeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws GraphError if the input is disconnected, InputIsTreeError if it has
/// no 2-core.
PendantForest pendant_tree_decomposition(const Graph& connected);

/// Edge-list text format: header `n m`, then one `u v` line per edge, u < v.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

}  // namespace crgp
