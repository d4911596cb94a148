#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <set>

#include "crgp/edge_stream.hpp"
#include "crgp/process.hpp"

#ifdef CRGP_HAVE_BOOST
#include <boost/math/distributions/chi_squared.hpp>
#endif

using namespace crgp;

namespace {

ProcessConfig config(Vertex n, GraphClass cls, StopRule stop, std::uint64_t seed) {
  ProcessConfig cfg;
  cfg.n = n;
  cfg.cls = cls;
  cfg.stop = stop;
  cfg.seed = seed;
  return cfg;
}

/// Bitmask over the pairs of [n] in lexicographic order.
std::uint32_t mask_of(const Graph& g) {
  const Vertex n = g.order();
  std::uint32_t m = 0;
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++bit) {
      if (g.has_edge(u, v)) m |= 1u << bit;
    }
  }
  return m;
}

Graph graph_of(Vertex n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = u + 1; v <= n; ++v, ++bit) {
      if (mask >> bit & 1u) g.add_edge(u, v);
    }
  }
  return g;
}

/// Exact law of the graph after m0 steps of "add a uniform addable pair".
std::map<std::uint32_t, double> exact_greedy_law(Vertex n, GraphClass cls, int m0) {
  const int pairs = static_cast<int>(pair_count(n));
  std::map<std::uint32_t, double> law{{0u, 1.0}};
  for (int step = 0; step < m0; ++step) {
    std::map<std::uint32_t, double> next;
    for (auto [mask, p] : law) {
      std::vector<std::uint32_t> addable;
      for (int b = 0; b < pairs; ++b) {
        if (mask >> b & 1u) continue;
        const std::uint32_t grown = mask | (1u << b);
        if (is_member(cls, graph_of(n, grown))) addable.push_back(grown);
      }
      for (std::uint32_t g : addable) next[g] += p / static_cast<double>(addable.size());
    }
    law = std::move(next);
  }
  return law;
}

/// Chi-square p-value of observed counts against a law, pooling cells with small
/// expectation.
double chi_square_p(const std::map<std::uint32_t, double>& law,
                    const std::map<std::uint32_t, int>& counts, int samples) {
  double stat = 0;
  int cells = 0;
  double pooled_e = 0;
  double pooled_o = 0;
  for (auto [mask, p] : law) {
    const double e = p * samples;
    const auto it = counts.find(mask);
    const double o = it == counts.end() ? 0.0 : it->second;
    if (e < 5) {
      pooled_e += e;
      pooled_o += o;
      continue;
    }
    stat += (o - e) * (o - e) / e;
    ++cells;
  }
  if (pooled_e > 0) {
    stat += (pooled_o - pooled_e) * (pooled_o - pooled_e) / pooled_e;
    ++cells;
  }
  for (auto [mask, c] : counts) CHECK(law.count(mask) == 1);
#ifdef CRGP_HAVE_BOOST
  const boost::math::chi_squared dist(cells - 1);
  return boost::math::cdf(boost::math::complement(dist, stat));
#else
  // Wilson-Hilferty normal approximation
  const double k = cells - 1;
  const double z = (std::cbrt(stat / k) - (1 - 2 / (9 * k))) / std::sqrt(2 / (9 * k));
  return 0.5 * std::erfc(z / std::sqrt(2.0));
#endif
}

}  // namespace

TEST_CASE("stop rule examples") {
  const ProcessTrace tri = run(config(3, GraphClass::planar, StopRule::all_queried(), 1));
  CHECK(tri.queried == 3);
  CHECK(tri.accepted == 3);
  CHECK(tri.records.back().r == 0);

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ProcessTrace t6 = run(config(6, GraphClass::planar, StopRule::all_queried(), seed));
    CHECK(t6.final_graph.size() == 12);
    CHECK(t6.queried == 15);
    CHECK(t6.records.back().r == 3);
  }

  const ProcessTrace none = run(config(40, GraphClass::unconstrained, StopRule::at_step(300), 4));
  CHECK(none.records.back().r == 0);
  CHECK(none.accepted == 300);

  ProcessConfig one = config(100, GraphClass::planar, StopRule::at_accepted(1), 5);
  CHECK(steps_until_accepted(one) == 1);
}

TEST_CASE("S(m0) is at least m0 and counts every query") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ProcessConfig cfg = config(300, GraphClass::cactus, StopRule::at_accepted(330), seed);
    const ProcessTrace tr = run(cfg);
    REQUIRE(tr.steps_to_accepted.has_value());
    CHECK(*tr.steps_to_accepted >= 330);
    CHECK(tr.accepted == 330);
    CHECK(tr.queried == *tr.steps_to_accepted);
    CHECK(tr.records.back().t - tr.records.back().m == tr.records.back().r);
  }
}

TEST_CASE("records at checkpoints") {
  ProcessConfig cfg = config(500, GraphClass::planar, StopRule::at_step(1500), 9);
  cfg.checkpoints = {100, 250, 750, 1500};
  cfg.track_er = true;
  cfg.census = true;
  const ProcessTrace tr = run(cfg);
  REQUIRE(tr.records.size() == 4);
  std::uint64_t prev_r = 0;
  std::uint64_t prev_m = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto& rec = tr.records[i];
    CHECK(rec.t == cfg.checkpoints[i]);
    CHECK(rec.m + rec.r == rec.t);
    CHECK(rec.r >= prev_r);
    CHECK(rec.m >= prev_m);
    REQUIRE(rec.er_excess.has_value());
    CHECK(rec.r <= *rec.er_excess);
    REQUIRE(rec.forbidden.has_value());
    prev_r = rec.r;
    prev_m = rec.m;
  }
  CHECK(tr.invariants.ok());
  CHECK(tr.invariants.steps_checked == 1500);
  CHECK(tr.invariants.partition_checks >= 4);
}

TEST_CASE("runs are determined by the seed") {
  for (GraphClass c : {GraphClass::planar, GraphClass::series_parallel, GraphClass::cactus}) {
    ProcessConfig cfg = config(2000, c, StopRule::at_step(4000), 77);
    cfg.checkpoints = {1000, 2000, 3000};
    const ProcessTrace a = run(cfg);
    const ProcessTrace b = run(cfg);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t i = 0; i < a.records.size(); ++i) {
      CHECK(a.records[i].m == b.records[i].m);
      CHECK(a.records[i].giant == b.records[i].giant);
    }
    CHECK(a.final_graph == b.final_graph);
    cfg.seed = 78;
    CHECK_FALSE(run(cfg).final_graph == a.final_graph);
  }
}

TEST_CASE("the naive oracle path gives the same run") {
  ProcessConfig cfg = config(800, GraphClass::outerplanar, StopRule::at_step(1600), 3);
  const ProcessTrace fast = run(cfg);
  cfg.use_shortcuts = false;
  const ProcessTrace slow = run(cfg);
  CHECK(fast.final_graph == slow.final_graph);
}

TEST_CASE("invariants hold in every class") {
  for (GraphClass c : {GraphClass::cactus, GraphClass::outerplanar, GraphClass::series_parallel,
                       GraphClass::planar, GraphClass::unconstrained}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      ProcessConfig cfg = config(150, c, StopRule::at_step(600), seed);
      cfg.track_er = true;
      for (std::uint64_t t = 60; t <= 600; t += 60) cfg.checkpoints.push_back(t);
      const ProcessTrace tr = run(cfg);
      CHECK(tr.invariants.ok());
      CHECK(is_member(c, tr.final_graph));
    }
  }
}

TEST_CASE("observer sees every query once") {
  ProcessConfig cfg = config(200, GraphClass::planar, StopRule::at_step(700), 12);
  std::uint64_t calls = 0;
  std::uint64_t rejected = 0;
  std::uint64_t last = 0;
  const ProcessTrace tr = run(cfg, [&](std::uint64_t t, Edge, bool, Decision d) {
    ++calls;
    CHECK(t == last + 1);
    last = t;
    if (d == Decision::reject) ++rejected;
  });
  CHECK(calls == 700);
  CHECK(rejected == tr.records.back().r);
}

TEST_CASE("bad configurations") {
  CHECK_THROWS_AS(run(config(10, GraphClass::planar, StopRule::at_step(46), 1)), InfeasibleStopError);
  CHECK_THROWS_AS(run(config(10, GraphClass::planar, StopRule::at_accepted(25), 1)), InfeasibleStopError);
  CHECK_THROWS_AS(run(config(10, GraphClass::cactus, StopRule::at_accepted(14), 1)), InfeasibleStopError);
  CHECK_THROWS_AS(random_greedy(10, GraphClass::cactus, 14, 1), InfeasibleStopError);
  ProcessConfig bad = config(10, GraphClass::planar, StopRule::at_step(20), 1);
  bad.checkpoints = {5, 3};
  CHECK_THROWS_AS(run(bad), std::invalid_argument);
  CHECK_THROWS_AS(run(config(0, GraphClass::planar, StopRule::all_queried(), 1)), std::invalid_argument);
}

TEST_CASE("stop when connected") {
  ProcessConfig cfg = config(400, GraphClass::planar, StopRule::at_accepted(480), 21);
  cfg.stop_when_connected = true;
  const ProcessTrace tr = run(cfg);
  if (tr.stopped_connected) {
    CHECK(tr.records.back().giant == 400);
    CHECK(tr.accepted <= 480);
  } else {
    CHECK(tr.accepted == 480);
  }
}

TEST_CASE("greedy and the process match the exact greedy law") {
  struct Case {
    Vertex n;
    GraphClass cls;
    int m0;
  };
  for (const Case c : {Case{5, GraphClass::cactus, 5}, Case{5, GraphClass::outerplanar, 6},
                       Case{5, GraphClass::series_parallel, 7}}) {
    const auto law = exact_greedy_law(c.n, c.cls, c.m0);
    const int samples = 20000;
    std::map<std::uint32_t, int> greedy;
    std::map<std::uint32_t, int> process;
    for (int k = 0; k < samples; ++k) {
      ++greedy[mask_of(random_greedy(c.n, c.cls, static_cast<std::uint64_t>(c.m0), split_seed(1, k)))];
      const ProcessTrace tr = run(config(c.n, c.cls, StopRule::at_accepted(c.m0), split_seed(2, k)));
      ++process[mask_of(tr.final_graph)];
    }
    CHECK(chi_square_p(law, greedy, samples) > 1e-3);
    CHECK(chi_square_p(law, process, samples) > 1e-3);
  }
}

TEST_CASE("forbidden and addable census") {
  const Census empty = count_forbidden_addable(Graph(10), GraphClass::planar);
  CHECK(empty.forbidden == 0);
  CHECK(empty.addable == 45);

  Graph oct(6);
  for (Vertex u = 1; u <= 6; ++u) {
    for (Vertex v = u + 1; v <= 6; ++v) {
      if (v != u + 3) oct.add_edge(u, v);
    }
  }
  const Census o = count_forbidden_addable(oct, GraphClass::planar);
  CHECK(o.forbidden == 3);
  CHECK(o.addable == 0);
  CHECK(o.edges == 12);

  Graph forest(12);
  for (Vertex v = 2; v <= 12; ++v) {
    if (v != 7) forest.add_edge(v / 2, v);
  }
  for (GraphClass c : constrained_classes()) CHECK(count_forbidden_addable(forest, c).forbidden == 0);

  // the census at a record agrees with the standalone count
  ProcessConfig cfg = config(300, GraphClass::series_parallel, StopRule::at_step(600), 4);
  cfg.census = true;
  const ProcessTrace tr = run(cfg);
  CHECK(*tr.records.back().forbidden ==
        count_forbidden_addable(tr.final_graph, GraphClass::series_parallel).forbidden);
}

TEST_CASE("classification table") {
  ProcessConfig cfg = config(300, GraphClass::unconstrained, StopRule::at_step(1), 6);
  const QueryTable q = classify_queries(cfg, 200, 450);
  CHECK(q.inside_rejected == 0);
  CHECK(q.outside_rejected == 0);
  CHECK(q.inside_accepted + q.outside_accepted == 251);

  cfg.cls = GraphClass::planar;
  const QueryTable p = classify_queries(cfg, 200, 450);
  CHECK(p.inside_rejected + p.inside_accepted + p.outside_rejected + p.outside_accepted == 251);
  CHECK(p.outside_rejected <= p.inside_rejected + p.outside_rejected);
}

TEST_CASE("edge stream is a permutation of the pairs") {
  for (StreamMode mode : {StreamMode::lazy, StreamMode::full}) {
    EdgeStream s(30, 5, mode);
    std::set<std::pair<Vertex, Vertex>> seen;
    while (auto e = s.next()) {
      CHECK(e->u < e->v);
      CHECK(seen.insert({e->u, e->v}).second);
    }
    CHECK(seen.size() == 435);
    CHECK(s.emitted() == 435);
  }
  Rng rng(1);
  std::array<int, 7> hist{};
  for (int i = 0; i < 70000; ++i) ++hist[rng.below(7)];
  for (int h : hist) CHECK(std::abs(h - 10000) < 500);
}
