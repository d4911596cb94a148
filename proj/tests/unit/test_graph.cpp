#include <doctest.h>

#include <numeric>
#include <sstream>

#include "crgp/edge_stream.hpp"
#include "crgp/graph.hpp"

using namespace crgp;

namespace {

Graph from_edges(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph random_graph(Vertex n, std::size_t m, Rng& rng) {
  Graph g(n);
  while (g.size() < m) {
    const auto u = static_cast<Vertex>(1 + rng.below(n));
    const auto v = static_cast<Vertex>(1 + rng.below(n));
    if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
  }
  return g;
}

std::vector<Vertex> bfs_labels(const Graph& g) {
  std::vector<Vertex> label(g.order(), 0);
  for (Vertex s = 1; s <= g.order(); ++s) {
    if (label[s - 1]) continue;
    std::vector<Vertex> q{s};
    label[s - 1] = s;
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (Vertex w : g.neighbors(q[i])) {
        if (!label[w - 1]) {
          label[w - 1] = s;
          q.push_back(w);
        }
      }
    }
  }
  return label;
}

}  // namespace

TEST_CASE("add_edge updates the tracker") {
  Graph g(3);
  ComponentTracker t(3);
  g.add_edge(1, 2);
  CHECK(t.add_edge(1, 2));
  CHECK(t.component_edges(1) == 1);
  CHECK(t.component_count() == 2);
  g.add_edge(2, 3);
  t.add_edge(2, 3);
  g.add_edge(1, 3);
  CHECK_FALSE(t.add_edge(1, 3));
  CHECK(t.component_count() == 1);
  CHECK(t.component_edges(1) == 3);
  CHECK(t.component_vertices(1) == 3);
  CHECK_THROWS_AS(g.add_edge(1, 1), GraphError);
  CHECK_THROWS_AS(g.add_edge(1, 2), GraphError);
  CHECK_THROWS_AS(g.add_edge(0, 2), GraphError);
  CHECK_THROWS_AS(g.add_edge(1, 4), GraphError);
}

TEST_CASE("excess examples") {
  Rng rng(3);
  Graph forest(10);
  for (Vertex v = 2; v <= 10; v += 2) forest.add_edge(v - 1, v);
  forest.add_edge(2, 3);
  CHECK(excess(forest) == 0);
  CHECK(excess(from_edges(4, {{1, 2}, {2, 3}, {1, 3}})) == 0);
  CHECK(excess(from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}})) == 2);
}

TEST_CASE("excess grows by one exactly for an edge inside a non-tree component or between two") {
  // Joining two non-tree components also raises the excess: their surpluses add
  // up and the bridge contributes one more edge than vertex-merges.
  Rng rng(11);
  for (int rep = 0; rep < 50; ++rep) {
    const Vertex n = 40;
    Graph g(n);
    ComponentTracker t(n);
    for (int step = 0; step < 80; ++step) {
      const auto u = static_cast<Vertex>(1 + rng.below(n));
      const auto v = static_cast<Vertex>(1 + rng.below(n));
      if (u == v || g.has_edge(u, v)) continue;
      const bool same = t.same_component(u, v);
      const bool tree_u = t.is_tree_component(u);
      const bool tree_v = t.is_tree_component(v);
      const std::size_t before = excess(g);
      g.add_edge(u, v);
      t.add_edge(u, v);
      const std::size_t after = excess(g);
      const bool expect_up = same ? !tree_u : (!tree_u && !tree_v);
      CHECK(after == before + (expect_up ? 1 : 0));
      CHECK(t.excess() == after);
    }
  }
  // the bridge case on its own
  Graph g = from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  CHECK(excess(g) == 0);
  g.add_edge(3, 4);
  CHECK(excess(g) == 1);
}

TEST_CASE("tracker partition equals a fresh BFS") {
  Rng rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const Vertex n = 200;
    Graph g(n);
    ComponentTracker t(n);
    for (int k = 0; k < 150; ++k) {
      const auto u = static_cast<Vertex>(1 + rng.below(n));
      const auto v = static_cast<Vertex>(1 + rng.below(n));
      if (u == v || g.has_edge(u, v)) continue;
      g.add_edge(u, v);
      t.add_edge(u, v);
    }
    CHECK(t.partition_labels() == bfs_labels(g));
    CHECK(t.partition_labels() == component_labels(g));
    CHECK(ComponentTracker::from_graph(g).partition_labels() == bfs_labels(g));
    const ComponentInfo big = largest_component(g);
    CHECK(big.size == t.largest_size());
    CHECK(t.in_largest(big.vertices.front()));
  }
}

TEST_CASE("two_core examples and properties") {
  Graph tree(6);
  for (Vertex v = 2; v <= 6; ++v) tree.add_edge(v / 2, v);
  CHECK(two_core(tree).size() == 0);

  Graph cycle(5);
  for (Vertex v = 1; v <= 5; ++v) cycle.add_edge(v, v % 5 + 1);
  CHECK(two_core(cycle) == cycle);

  const Graph lollipop = from_edges(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}});
  const Graph core = two_core(lollipop);
  CHECK(core == from_edges(6, {{1, 2}, {2, 3}, {1, 3}}));

  Rng rng(9);
  for (int rep = 0; rep < 30; ++rep) {
    const Graph g = random_graph(60, 70, rng);
    const Graph c = two_core(g);
    CHECK(two_core(c) == c);
    for (const Edge& e : c.edges()) CHECK(g.has_edge(e.u, e.v));
    const auto in = two_core_vertices(g);
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (in[v - 1]) CHECK(c.degree(v) >= 2);
    }
    // removing a degree-1 vertex first changes nothing
    for (Vertex v = 1; v <= g.order(); ++v) {
      if (g.degree(v) != 1) continue;
      Graph h(g.order());
      for (const Edge& e : g.edges()) {
        if (e.u != v && e.v != v) h.add_edge(e.u, e.v);
      }
      CHECK(two_core(h) == c);
      break;
    }
  }
}

TEST_CASE("pendant tree decomposition") {
  Graph c5(5);
  for (Vertex v = 1; v <= 5; ++v) c5.add_edge(v, v % 5 + 1);
  const PendantForest f5 = pendant_tree_decomposition(c5);
  for (Vertex v = 1; v <= 5; ++v) {
    CHECK(f5.in_core[v - 1]);
    CHECK(f5.weight[v - 1] == 1);
    CHECK(f5.tree_of[v - 1] == v);
  }

  const Graph tri = from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
  const PendantForest ft = pendant_tree_decomposition(tri);
  CHECK(ft.weight[0] == 1);
  CHECK(ft.weight[1] == 1);
  CHECK(ft.weight[2] == 2);
  CHECK(ft.tree_of[3] == 3);
  CHECK_FALSE(ft.in_core[3]);

  Graph path(4);
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  path.add_edge(3, 4);
  CHECK_THROWS_AS(pendant_tree_decomposition(path), InputIsTreeError);
  CHECK_THROWS_AS(pendant_tree_decomposition(from_edges(5, {{1, 2}, {2, 3}, {1, 3}})), GraphError);

  Rng rng(21);
  for (int rep = 0; rep < 30; ++rep) {
    Graph g(80);
    for (Vertex v = 2; v <= 80; ++v) g.add_edge(static_cast<Vertex>(1 + rng.below(v - 1)), v);
    for (int k = 0; k < 3; ++k) {
      const auto u = static_cast<Vertex>(1 + rng.below(80));
      const auto v = static_cast<Vertex>(1 + rng.below(80));
      if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    if (excess(g) == 0 && g.size() == 79) continue;
    const PendantForest f = pendant_tree_decomposition(g);
    const std::size_t total = std::accumulate(f.weight.begin(), f.weight.end(), std::size_t{0});
    CHECK(total == g.order());
    // forest edges plus core edges rebuild the graph
    std::size_t forest_edges = 0;
    for (const Edge& e : g.edges()) {
      if (!f.core.has_edge(e.u, e.v)) {
        ++forest_edges;
        CHECK(f.tree_of[e.u - 1] == f.tree_of[e.v - 1]);
      }
    }
    CHECK(forest_edges + f.core.size() == g.size());
  }
}

TEST_CASE("largest component and max degree") {
  CHECK(largest_component(Graph(5)).size == 1);
  CHECK(largest_component(Graph(5)).vertices == std::vector<Vertex>{1});
  const Graph two = from_edges(6, {{4, 5}, {5, 6}, {4, 6}, {1, 2}, {2, 3}, {1, 3}});
  CHECK(largest_component(two).vertices == std::vector<Vertex>{1, 2, 3});
  ComponentTracker t = ComponentTracker::from_graph(two);
  CHECK(t.in_largest(1));
  CHECK_FALSE(t.in_largest(4));
  Graph star(8);
  for (Vertex v = 2; v <= 8; ++v) star.add_edge(1, v);
  CHECK(max_degree(star) == 7);
}

TEST_CASE("edge list round trip") {
  const Graph g = from_edges(5, {{2, 1}, {3, 5}, {1, 4}});
  std::stringstream ss;
  write_edge_list(ss, g);
  CHECK(ss.str().rfind("5 3\n", 0) == 0);
  const Graph back = read_edge_list(ss);
  CHECK(back == g);
}
