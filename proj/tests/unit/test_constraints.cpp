#include <doctest.h>

#include "crgp/axioms.hpp"
#include "crgp/constraints.hpp"
#include "crgp/edge_stream.hpp"
#include "crgp/kernel_oracle.hpp"
#include "crgp/verify.hpp"

using namespace crgp;

namespace {

Graph from_edges(Vertex n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete_minus(Vertex n, Vertex a, Vertex b) {
  Graph g(n);
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v) {
      if (!(u == a && v == b)) g.add_edge(u, v);
    }
  }
  return g;
}

Decision ask(GraphClass cls, const Graph& g, Vertex u, Vertex v) {
  const auto oracle = make_oracle(cls);
  const Decision stateless = oracle->allows(g, ComponentTracker::from_graph(g), u, v);
  IncrementalOracle inc(*oracle, g);
  CHECK(inc.allows(u, v) == stateless);
  return stateless;
}

}  // namespace

TEST_CASE("class names round-trip") {
  for (GraphClass c : {GraphClass::cactus, GraphClass::outerplanar, GraphClass::series_parallel,
                       GraphClass::planar, GraphClass::unconstrained}) {
    CHECK(parse_graph_class(to_string(c)) == c);
  }
  CHECK(parse_graph_class("series-parallel") == GraphClass::series_parallel);
  CHECK(parse_graph_class("none") == GraphClass::unconstrained);
  CHECK_FALSE(parse_graph_class("toroidal").has_value());
}

TEST_CASE("excess thresholds match the forbidden minors") {
  for (GraphClass c : constrained_classes()) {
    std::size_t lowest = SIZE_MAX;
    for (const Graph& h : forbidden_minors(c)) lowest = std::min(lowest, h.size() - h.order());
    CHECK(excess_threshold(c) == lowest);
  }
  CHECK(excess_threshold(GraphClass::cactus) == 1);
  CHECK(excess_threshold(GraphClass::outerplanar) == 1);
  CHECK(excess_threshold(GraphClass::series_parallel) == 2);
  CHECK(excess_threshold(GraphClass::planar) == 3);
  CHECK(forbidden_minors(GraphClass::unconstrained).empty());
}

TEST_CASE("allows examples") {
  // completing K5 is the only forbidden pair of K5 - e
  CHECK(ask(GraphClass::planar, complete_minus(5, 1, 2), 1, 2) == Decision::reject);
  // the chord of C4 makes a diamond, which is not a cactus
  const Graph c4 = from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  CHECK(ask(GraphClass::cactus, c4, 1, 3) == Decision::reject);
  CHECK(ask(GraphClass::outerplanar, c4, 1, 3) == Decision::accept);
  CHECK(ask(GraphClass::series_parallel, complete_minus(4, 1, 2), 1, 2) == Decision::reject);
  CHECK(ask(GraphClass::planar, complete_minus(4, 1, 2), 1, 2) == Decision::accept);
  // K2,3 minus an edge plus that edge
  const Graph k23e = from_edges(5, {{1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}});
  CHECK(ask(GraphClass::outerplanar, k23e, 2, 5) == Decision::reject);
  CHECK(ask(GraphClass::series_parallel, k23e, 2, 5) == Decision::accept);
  // different components and tree components are always fine
  const Graph two = from_edges(8, {{1, 2}, {2, 3}, {1, 3}, {5, 6}, {6, 7}});
  for (GraphClass c : constrained_classes()) {
    CHECK(ask(c, two, 3, 5) == Decision::accept);
    CHECK(ask(c, two, 5, 7) == Decision::accept);
    CHECK(ask(c, two, 4, 8) == Decision::accept);
  }
  for (GraphClass c : constrained_classes()) {
    CHECK_THROWS_AS(ask(c, two, 1, 2), EdgePresentError);
  }
}

TEST_CASE("queries see every block between their endpoints") {
  // triangle 1-2-3, diamond on 3,4,5,6 with 3 and 6 of degree two, triangle
  // 6-7-8, and a triangle 1-9-10 off to the side
  const Graph g = from_edges(10, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6},
                                  {6, 7}, {7, 8}, {6, 8}, {1, 9}, {9, 10}, {1, 10}});
  // 1-7 routes through the diamond and closes a K4 subdivision
  CHECK(ask(GraphClass::outerplanar, g, 1, 7) == Decision::reject);
  CHECK(ask(GraphClass::series_parallel, g, 1, 7) == Decision::reject);
  CHECK(ask(GraphClass::planar, g, 1, 7) == Decision::accept);
  // 2-9 only merges the two triangles at vertex 1
  CHECK(ask(GraphClass::outerplanar, g, 2, 9) == Decision::accept);
  CHECK(ask(GraphClass::series_parallel, g, 2, 9) == Decision::accept);

  // two triangles joined by the bridges 3-4 and 4-5
  const Graph cactus = from_edges(7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  CHECK(ask(GraphClass::cactus, cactus, 3, 5) == Decision::accept);
  CHECK(ask(GraphClass::cactus, cactus, 2, 5) == Decision::reject);
  CHECK(ask(GraphClass::cactus, cactus, 3, 6) == Decision::reject);
}

TEST_CASE("exhaustive equivalence with forbidden-minor membership") {
  for (GraphClass c : constrained_classes()) {
    const EquivalenceReport r = exhaustive_equivalence(c, 5);
    CHECK(r.disagreements == 0);
    CHECK(r.graphs == 1 + 2 + 8 + 64 + 1024);
  }
}

TEST_CASE("sampled equivalence at n=7") {
  for (GraphClass c : constrained_classes()) {
    const EquivalenceReport r = sampled_equivalence(c, 7, 2500, 100 + static_cast<int>(c));
    CHECK(r.disagreements == 0);
  }
}

TEST_CASE("reduced-core oracle agrees with the naive path") {
  Rng rng(31337);
  for (GraphClass c : constrained_classes()) {
    const auto fast = make_oracle(c, true);
    const auto naive = make_oracle(c, false);
    std::uint64_t queries = 0;
    std::uint64_t mismatches = 0;
    while (queries < 25000) {
      const auto n = static_cast<Vertex>(20 + rng.below(180));
      IncrementalOracle inc(*fast, n);
      Graph g(n);
      ComponentTracker t(n);
      for (std::uint64_t k = 0; k < 3ull * n && queries < 25000; ++k) {
        const auto u = static_cast<Vertex>(1 + rng.below(n));
        const auto v = static_cast<Vertex>(1 + rng.below(n));
        if (u == v || g.has_edge(u, v)) continue;
        const Decision a = inc.allows(u, v);
        const Decision b = naive->allows(g, t, u, v);
        ++queries;
        if (a != b) ++mismatches;
        if (b == Decision::accept) {
          inc.add_edge(u, v);
          g.add_edge(u, v);
          t.add_edge(u, v);
        }
      }
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("rejection is hereditary along a run") {
  Rng rng(8);
  for (GraphClass c : constrained_classes()) {
    const auto oracle = make_oracle(c);
    const Vertex n = 60;
    IncrementalOracle inc(*oracle, n);
    std::vector<Edge> rejected;
    for (int k = 0; k < 400; ++k) {
      const auto u = static_cast<Vertex>(1 + rng.below(n));
      const auto v = static_cast<Vertex>(1 + rng.below(n));
      if (u == v || inc.graph().has_edge(u, v)) continue;
      if (inc.allows(u, v) == Decision::accept) {
        inc.add_edge(u, v);
      } else {
        rejected.push_back({std::min(u, v), std::max(u, v)});
      }
      for (const Edge& e : rejected) CHECK(inc.allows(e.u, e.v) == Decision::reject);
    }
    CHECK(oracle->is_member(inc.graph()));
  }
}

TEST_CASE("forbidden count of the incremental oracle") {
  const auto oracle = make_oracle(GraphClass::planar);
  IncrementalOracle inc(*oracle, complete_minus(5, 1, 2));
  CHECK(inc.count_forbidden() == 1);
  const auto sp = make_oracle(GraphClass::series_parallel);
  IncrementalOracle c5(*sp, Graph(5));
  CHECK(c5.count_forbidden() == 0);
}

TEST_CASE("axiom checks on the real classes") {
  const auto sample = sample_graphs(150, 7, 5);
  for (GraphClass c : constrained_classes()) {
    const auto oracle = make_oracle(c);
    const AxiomReport r = axiom_check(*oracle, sample, 6);
    CHECK(r.ok());
    CHECK_FALSE(r.informational_a);
  }
  const auto none = make_oracle(GraphClass::unconstrained);
  const AxiomReport r = axiom_check(*none, sample, 6);
  CHECK(r.ok());
  CHECK(r.informational_a);
}

TEST_CASE("max_edges caps") {
  CHECK(max_edges(GraphClass::planar, 10) == 24);
  CHECK(max_edges(GraphClass::planar, 2) == 1);
  CHECK(max_edges(GraphClass::series_parallel, 10) == 17);
  CHECK(max_edges(GraphClass::outerplanar, 10) == 17);
  CHECK(max_edges(GraphClass::cactus, 10) == 13);
  CHECK(max_edges(GraphClass::unconstrained, 10) == 45);
}
