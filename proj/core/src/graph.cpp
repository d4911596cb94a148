#include "crgp/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>

namespace crgp {

Graph::Graph(Vertex n) : n_(n), adj_(n) {}

void Graph::add_edge(Vertex u, Vertex v) {
  if (!contains(u) || !contains(v)) {
    std::ostringstream os;
    os << "vertex label out of range in edge (" << u << "," << v << ") for n=" << n_;
    throw GraphError(os.str());
  }
  if (u == v) {
    throw GraphError("self-loop at vertex " + std::to_string(u));
  }
  if (has_edge(u, v)) {
    std::ostringstream os;
    os << "duplicate edge (" << u << "," << v << ")";
    throw GraphError(os.str());
  }
  adj_[u - 1].push_back(v);
  adj_[v - 1].push_back(u);
  edges_.push_back(make_edge(u, v));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  const auto& a = adj_[u - 1];
  const auto& b = adj_[v - 1];
  if (a.size() <= b.size()) return std::find(a.begin(), a.end(), v) != a.end();
  return std::find(b.begin(), b.end(), u) != b.end();
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edges_.size() != b.edges_.size()) return false;
  auto ea = a.edges_;
  auto eb = b.edges_;
  std::sort(ea.begin(), ea.end());
  std::sort(eb.begin(), eb.end());
  return ea == eb;
}

// ---------------------------------------------------------------------------

ComponentTracker::ComponentTracker(Vertex n)
    : parent_(n), vertices_(n, 1), edges_(n, 0), min_label_(n), components_(n),
      tree_components_(n) {
  std::iota(parent_.begin(), parent_.end(), Vertex{1});
  std::iota(min_label_.begin(), min_label_.end(), Vertex{1});
  largest_root_ = n > 0 ? 1 : 0;
}

ComponentTracker ComponentTracker::from_graph(const Graph& g) {
  ComponentTracker t(g.order());
  for (const Edge& e : g.edges()) t.add_edge(e.u, e.v);
  return t;
}

Vertex ComponentTracker::find(Vertex v) const {
  Vertex x = v;
  while (parent_[x - 1] != x) {
    parent_[x - 1] = parent_[parent_[x - 1] - 1];  // path halving
    x = parent_[x - 1];
  }
  return x;
}

bool ComponentTracker::better(Vertex a, Vertex b) const {
  // a, b roots
  if (vertices_[a - 1] != vertices_[b - 1]) return vertices_[a - 1] > vertices_[b - 1];
  return min_label_[a - 1] < min_label_[b - 1];
}

bool ComponentTracker::add_edge(Vertex u, Vertex v) {
  Vertex ru = find(u);
  Vertex rv = find(v);
  ++edge_count_;
  if (ru == rv) {
    const bool was_tree = edges_[ru - 1] + 1 == vertices_[ru - 1];
    ++edges_[ru - 1];
    if (was_tree) {
      --tree_components_;  // m - n rises by one, nt drops by one
    } else {
      ++excess_;
    }
    return false;
  }
  const bool tree_u = edges_[ru - 1] + 1 == vertices_[ru - 1];
  const bool tree_v = edges_[rv - 1] + 1 == vertices_[rv - 1];
  if (vertices_[ru - 1] < vertices_[rv - 1]) std::swap(ru, rv);
  parent_[rv - 1] = ru;
  vertices_[ru - 1] += vertices_[rv - 1];
  edges_[ru - 1] += edges_[rv - 1] + 1;
  min_label_[ru - 1] = std::min(min_label_[ru - 1], min_label_[rv - 1]);
  --components_;
  if (tree_u && tree_v) {
    --tree_components_;
  } else if (tree_u || tree_v) {
    --tree_components_;
  } else {
    ++excess_;  // bridge between two non-tree components
  }
  const Vertex best = find(largest_root_);
  if (best == ru || best == rv || better(ru, best)) largest_root_ = ru;
  return true;
}

std::vector<Vertex> ComponentTracker::partition_labels() const {
  std::vector<Vertex> out(parent_.size());
  for (Vertex v = 1; v <= parent_.size(); ++v) out[v - 1] = min_label_[find(v) - 1];
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Vertex> component_labels(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Vertex> label(n, 0);
  std::vector<Vertex> queue;
  for (Vertex s = 1; s <= n; ++s) {
    if (label[s - 1] != 0) continue;
    label[s - 1] = s;
    queue.assign(1, s);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (Vertex w : g.neighbors(queue[i])) {
        if (label[w - 1] == 0) {
          label[w - 1] = s;
          queue.push_back(w);
        }
      }
    }
  }
  return label;
}

std::size_t excess(const Graph& g) {
  const auto label = component_labels(g);
  const Vertex n = g.order();
  std::vector<std::size_t> nv(n + 1, 0), ne(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) ++nv[label[v - 1]];
  for (const Edge& e : g.edges()) ++ne[label[e.u - 1]];
  std::size_t trees = 0;
  for (Vertex r = 1; r <= n; ++r) {
    if (nv[r] > 0 && ne[r] + 1 == nv[r]) ++trees;
  }
  return g.size() + trees - n;
}

std::vector<bool> two_core_vertices(const Graph& g) {
  const Vertex n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> alive(n, true);
  std::vector<Vertex> queue;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v - 1] = g.degree(v);
    if (deg[v - 1] < 2) {
      alive[v - 1] = false;
      queue.push_back(v);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : g.neighbors(queue[i])) {
      if (alive[w - 1] && --deg[w - 1] < 2) {
        alive[w - 1] = false;
        queue.push_back(w);
      }
    }
  }
  return alive;
}

Graph two_core(const Graph& g) {
  const auto alive = two_core_vertices(g);
  Graph core(g.order());
  for (const Edge& e : g.edges()) {
    if (alive[e.u - 1] && alive[e.v - 1]) core.add_edge(e.u, e.v);
  }
  return core;
}

ComponentInfo largest_component(const Graph& g) {
  const auto label = component_labels(g);
  const Vertex n = g.order();
  std::vector<std::size_t> count(n + 1, 0);
  for (Vertex v = 1; v <= n; ++v) ++count[label[v - 1]];
  ComponentInfo info;
  Vertex best = 0;
  for (Vertex r = 1; r <= n; ++r) {
    // labels are component minima, so scanning r ascending resolves ties
    if (count[r] > info.size) {
      info.size = count[r];
      best = r;
    }
  }
  for (Vertex v = 1; v <= n; ++v) {
    if (label[v - 1] == best) info.vertices.push_back(v);
  }
  return info;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (Vertex v = 1; v <= g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  Subgraph sub;
  sub.original.assign(vertices.begin(), vertices.end());
  std::sort(sub.original.begin(), sub.original.end());
  std::vector<Vertex> index(g.order(), 0);
  for (std::size_t i = 0; i < sub.original.size(); ++i) {
    index[sub.original[i] - 1] = static_cast<Vertex>(i + 1);
  }
  sub.graph = Graph(static_cast<Vertex>(sub.original.size()));
  for (const Edge& e : g.edges()) {
    const Vertex a = index[e.u - 1];
    const Vertex b = index[e.v - 1];
    if (a != 0 && b != 0) sub.graph.add_edge(a, b);
  }
  return sub;
}

Subgraph component_of(const Graph& g, Vertex v) {
  const auto label = component_labels(g);
  std::vector<Vertex> members;
  for (Vertex x = 1; x <= g.order(); ++x) {
    if (label[x - 1] == label[v - 1]) members.push_back(x);
  }
  return induced_subgraph(g, members);
}

PendantForest pendant_tree_decomposition(const Graph& connected) {
  const Vertex n = connected.order();
  if (n == 0) throw GraphError("pendant_tree_decomposition: empty graph");
  const auto label = component_labels(connected);
  for (Vertex v = 1; v <= n; ++v) {
    if (label[v - 1] != 1) throw GraphError("pendant_tree_decomposition: graph is not connected");
  }
  PendantForest pf;
  pf.in_core = two_core_vertices(connected);
  if (std::none_of(pf.in_core.begin(), pf.in_core.end(), [](bool b) { return b; })) {
    throw InputIsTreeError("pendant_tree_decomposition: input is a tree (empty 2-core)");
  }
  pf.core = Graph(n);
  for (const Edge& e : connected.edges()) {
    if (pf.in_core[e.u - 1] && pf.in_core[e.v - 1]) pf.core.add_edge(e.u, e.v);
  }
  // Multi-source BFS from the core through non-core vertices. Deleting the
  // core edges leaves each non-core vertex in exactly one tree T_x.
  pf.tree_of.assign(n, 0);
  pf.weight.assign(n, 0);
  std::vector<Vertex> queue;
  for (Vertex v = 1; v <= n; ++v) {
    if (pf.in_core[v - 1]) {
      pf.tree_of[v - 1] = v;
      queue.push_back(v);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Vertex x = queue[i];
    for (Vertex w : connected.neighbors(x)) {
      if (pf.tree_of[w - 1] == 0) {
        pf.tree_of[w - 1] = pf.tree_of[x - 1];
        queue.push_back(w);
      }
    }
  }
  for (Vertex v = 1; v <= n; ++v) ++pf.weight[pf.tree_of[v - 1] - 1];
  return pf;
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::size_t n = 0, m = 0;
  if (!(is >> n >> m)) throw GraphError("edge list: missing `n m` header");
  Graph g(static_cast<Vertex>(n));
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(is >> u >> v)) throw GraphError("edge list: expected " + std::to_string(m) + " edges");
    if (u >= v) throw GraphError("edge list: edges must be written with u < v");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return g;
}

}  // namespace crgp
