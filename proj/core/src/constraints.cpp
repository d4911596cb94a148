#include "crgp/constraints.hpp"

#include <algorithm>
#include <sstream>

namespace crgp {
namespace {

Graph complete_graph(Vertex n) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph complete_bipartite(Vertex a, Vertex b) {
  Graph g(a + b);
  for (Vertex u = 1; u <= a; ++u) {
    for (Vertex v = a + 1; v <= a + b; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph diamond() {
  Graph g(4);
  g.add_edge(1, 2);
  g.add_edge(1, 3);
  g.add_edge(1, 4);
  g.add_edge(2, 3);
  g.add_edge(3, 4);
  return g;
}

}  // namespace

std::string_view to_string(GraphClass cls) {
  switch (cls) {
    case GraphClass::cactus: return "cactus";
    case GraphClass::outerplanar: return "outerplanar";
    case GraphClass::series_parallel: return "series-parallel";
    case GraphClass::planar: return "planar";
    case GraphClass::unconstrained: return "none";
  }
  return "?";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
  if (name == "cactus") return GraphClass::cactus;
  if (name == "outerplanar") return GraphClass::outerplanar;
  if (name == "series-parallel" || name == "series_parallel" || name == "sp") {
    return GraphClass::series_parallel;
  }
  if (name == "planar") return GraphClass::planar;
  if (name == "none" || name == "unconstrained") return GraphClass::unconstrained;
  return std::nullopt;
}

const std::vector<GraphClass>& constrained_classes() {
  static const std::vector<GraphClass> all = {GraphClass::cactus, GraphClass::outerplanar,
                                              GraphClass::series_parallel, GraphClass::planar};
  return all;
}

std::vector<Graph> forbidden_minors(GraphClass cls) {
  switch (cls) {
    case GraphClass::cactus: return {diamond()};
    case GraphClass::outerplanar: return {complete_graph(4), complete_bipartite(2, 3)};
    case GraphClass::series_parallel: return {complete_graph(4)};
    case GraphClass::planar: return {complete_graph(5), complete_bipartite(3, 3)};
    case GraphClass::unconstrained: return {};
  }
  return {};
}

std::size_t excess_threshold(GraphClass cls) {
  switch (cls) {
    case GraphClass::cactus: return 1;           // diamond: 5 - 4
    case GraphClass::outerplanar: return 1;      // K2,3: 6 - 5
    case GraphClass::series_parallel: return 2;  // K4: 6 - 4
    case GraphClass::planar: return 3;           // K3,3: 9 - 6
    case GraphClass::unconstrained: return static_cast<std::size_t>(-1);
  }
  return 0;
}

std::size_t max_edges(GraphClass cls, std::size_t n) {
  const std::size_t all = n * (n - (n > 0 ? 1 : 0)) / 2;
  switch (cls) {
    case GraphClass::planar: return n <= 2 ? all : 3 * n - 6;
    case GraphClass::outerplanar:
    case GraphClass::series_parallel: return n <= 1 ? 0 : 2 * n - 3;
    case GraphClass::cactus: return n <= 1 ? 0 : 3 * (n - 1) / 2;
    case GraphClass::unconstrained: return all;
  }
  return 0;
}

bool ConstraintOracle::accepts_connected(const LocalGraph& g) const {
  switch (cls_) {
    case GraphClass::cactus: return is_cactus(g);
    case GraphClass::outerplanar: return is_outerplanar(g, planarity_);
    case GraphClass::series_parallel: return is_series_parallel(g);
    case GraphClass::planar: return planarity_.is_planar(g);
    case GraphClass::unconstrained: return true;
  }
  return true;
}

bool ConstraintOracle::is_member(const Graph& g) const {
  if (cls_ == GraphClass::unconstrained) return true;
  const auto label = component_labels(g);
  std::vector<std::vector<Vertex>> members(g.order() + 1);
  for (Vertex v = 1; v <= g.order(); ++v) members[label[v - 1]].push_back(v);
  for (Vertex r = 1; r <= g.order(); ++r) {
    if (members[r].size() < 4) continue;  // every graph on <= 3 vertices is in every class
    const Subgraph sub = induced_subgraph(g, members[r]);
    if (!accepts_connected(LocalGraph::from_graph(sub.graph))) return false;
  }
  return true;
}

Decision ConstraintOracle::allows(const Graph& g, const ComponentTracker& tracker, Vertex u,
                                  Vertex v) const {
  if (u == v) throw GraphError("allows: self-loop query at vertex " + std::to_string(u));
  if (!g.contains(u) || !g.contains(v)) throw GraphError("allows: vertex label out of range");
  if (g.has_edge(u, v)) {
    std::ostringstream os;
    os << "allows: edge (" << u << "," << v << ") already present";
    throw EdgePresentError(os.str());
  }
  if (cls_ == GraphClass::unconstrained) return Decision::accept;

  const bool same = tracker.same_component(u, v);
  if (shortcuts_) {
    if (!same) return Decision::accept;
    if (tracker.is_tree_component(u)) return Decision::accept;
    const std::size_t m_after = tracker.component_edges(u) + 1;
    const std::size_t nv = tracker.component_vertices(u);
    if (m_after < nv + excess_threshold()) return Decision::accept;
  }

  // Full test on the component(s) of u and v joined by uv.
  std::vector<int> local(g.order(), -1);
  std::vector<Vertex> order;
  for (Vertex s : {u, v}) {
    if (local[s - 1] != -1) continue;
    local[s - 1] = static_cast<int>(order.size());
    order.push_back(s);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
      for (Vertex w : g.neighbors(order[i])) {
        if (local[w - 1] == -1) {
          local[w - 1] = static_cast<int>(order.size());
          order.push_back(w);
        }
      }
    }
  }
  LocalGraph lg(static_cast<int>(order.size()));
  for (Vertex x : order) {
    for (Vertex w : g.neighbors(x)) {
      if (x < w) lg.add_edge(local[x - 1], local[w - 1]);
    }
  }
  lg.add_edge(local[u - 1], local[v - 1]);
  lg.finalize();
  return accepts_connected(lg) ? Decision::accept : Decision::reject;
}

std::unique_ptr<ConstraintOracle> make_oracle(GraphClass cls, bool use_shortcuts) {
  return std::make_unique<ConstraintOracle>(cls, use_shortcuts);
}

bool is_member(GraphClass cls, const Graph& g) {
  ConstraintOracle oracle(cls);
  return oracle.is_member(g);
}

}  // namespace crgp
