#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crgp/class_tests.hpp"
#include "crgp/graph.hpp"
#include "crgp/local_graph.hpp"

namespace crgp {

enum class GraphClass { cactus, outerplanar, series_parallel, planar, unconstrained };

/// Canonical CLI spelling: cactus | outerplanar | series-parallel | planar | none.
std::string_view to_string(GraphClass cls);
std::optional<GraphClass> parse_graph_class(std::string_view name);
const std::vector<GraphClass>& constrained_classes();

/// Forbidden minors of a class (empty for the unconstrained class).
std::vector<Graph> forbidden_minors(GraphClass cls);

/// Minimum of m(H) - v(H) over the forbidden minors H. A connected graph with
/// m - v below this value cannot contain any of them.
std::size_t excess_threshold(GraphClass cls);

/// Largest edge count of a graph in the class on n vertices (the class-specific
/// feasibility cap for runs that stop after m0 accepted edges).
std::size_t max_edges(GraphClass cls, std::size_t n);

enum class Decision { accept, reject };

class EdgePresentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Decides whether G + uv stays in the class. Implementations must be
/// hereditary and must accept edges between components or inside tree
/// components.
class ConstraintOracle {
 public:
  explicit ConstraintOracle(GraphClass cls, bool use_shortcuts = true)
      : cls_(cls), shortcuts_(use_shortcuts) {}
  virtual ~ConstraintOracle() = default;

  GraphClass graph_class() const { return cls_; }
  std::string_view name() const { return to_string(cls_); }
  bool shortcuts_enabled() const { return shortcuts_; }
  std::size_t excess_threshold() const { return crgp::excess_threshold(cls_); }

  /// Membership of a connected simple graph. Not thread-safe (scratch buffers).
  virtual bool accepts_connected(const LocalGraph& g) const;

  /// Membership of an arbitrary graph, component by component.
  bool is_member(const Graph& g) const;

  /// Component-local decision for the non-edge uv. `tracker` must describe g.
  virtual Decision allows(const Graph& g, const ComponentTracker& tracker, Vertex u,
                          Vertex v) const;

 private:
  GraphClass cls_;
  bool shortcuts_;
  mutable PlanarityTester planarity_;
};

std::unique_ptr<ConstraintOracle> make_oracle(GraphClass cls, bool use_shortcuts = true);

/// Class membership of a whole graph without an oracle object.
bool is_member(GraphClass cls, const Graph& g);

}  // namespace crgp
