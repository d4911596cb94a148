#include <doctest.h>

#include <cmath>
#include <sstream>

#include "crgp/csv.hpp"
#include "crgp/harness.hpp"

using namespace crgp;
using namespace crgp::harness;

TEST_CASE("quantiles and summaries") {
  const std::vector<double> xs{1, 2, 3, 4, 5};
  CHECK(quantile(xs, 0.0) == 1.0);
  CHECK(quantile(xs, 1.0) == 5.0);
  CHECK(quantile(xs, 0.5) == 3.0);
  CHECK(quantile(xs, 0.1) == doctest::Approx(1.4));
  CHECK(quantile(xs, 0.9) == doctest::Approx(4.6));
  const Stats s = summarize({5, 1, 3, 2, 4});
  CHECK(s.count == 5);
  CHECK(s.mean == 3.0);
  CHECK(s.std == doctest::Approx(std::sqrt(2.5)));
  CHECK(s.q50 == 3.0);
  const Stats one = summarize({7});
  CHECK(one.std == 0.0);
  CHECK(one.q10 == 7.0);
}

TEST_CASE("csv numbers round-trip") {
  for (double x : {0.1, 1.0 / 3.0, 1e-300, 12345.0, 0.7968121300200200}) {
    CHECK(std::stod(csv::number(x)) == x);
  }
  CHECK(csv::number(3.0) == "3");
}

TEST_CASE("parallel_for covers every index once") {
  std::vector<int> hits(1000, 0);
  parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
  for (int h : hits) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) {
                    if (i == 7) throw std::runtime_error("boom");
                  }),
                  std::runtime_error);
}

TEST_CASE("sweep output does not depend on the thread count") {
  SweepConfig cfg;
  cfg.ns = {300, 600};
  cfg.cs = {1.0, 2.5};
  cfg.replicates = 4;
  cfg.master_seed = 99;
  cfg.cls = GraphClass::series_parallel;
  std::string outputs[2];
  std::string reps[2];
  int k = 0;
  for (unsigned jobs : {1u, 3u}) {
    cfg.jobs = jobs;
    const SweepResult r = run_sweep(cfg);
    std::ostringstream a;
    std::ostringstream b;
    write_sweep(a, cfg, r);
    write_replicates(b, cfg, r);
    outputs[k] = a.str();
    reps[k] = b.str();
    ++k;
  }
  CHECK(outputs[0] == outputs[1]);
  CHECK(reps[0] == reps[1]);
  CHECK(outputs[0].rfind(std::string(kSweepHeader), 0) == 0);
}

TEST_CASE("aggregate recomputes the cell statistics") {
  SweepConfig cfg;
  cfg.ns = {400};
  cfg.cs = {1.5, 3.0};
  cfg.replicates = 5;
  cfg.master_seed = 7;
  cfg.mode = SweepMode::accepted;
  const SweepResult r = run_sweep(cfg);
  REQUIRE(r.rows.size() == 10);
  const auto again = aggregate(cfg, r.rows);
  REQUIRE(again.size() == r.cells.size());
  for (std::size_t i = 0; i < again.size(); ++i) {
    CHECK(again[i].t.mean == r.cells[i].t.mean);
    CHECK(again[i].giant.q90 == r.cells[i].giant.q90);
    CHECK(again[i].failures == 0);
    CHECK(r.cells[i].m.mean == static_cast<double>(r.cells[i].target));
  }
  CHECK(r.rows[3].seed == replicate_seed(7, 0, 3));
  CHECK(r.rows[6].seed == replicate_seed(7, 1, 1));
}

TEST_CASE("infeasible sweep cells are reported, not fatal") {
  SweepConfig cfg;
  cfg.ns = {50};
  cfg.cs = {5.0};
  cfg.mode = SweepMode::accepted;
  cfg.cls = GraphClass::cactus;
  cfg.replicates = 2;
  const SweepResult r = run_sweep(cfg);
  CHECK(r.cells[0].failures == 2);
  CHECK_FALSE(r.cells[0].first_error.empty());
}

TEST_CASE("analytic table") {
  std::ostringstream os;
  write_analytic(os, 1.5, 2.0, 0.25);
  std::istringstream in(os.str());
  std::string line;
  int lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == 4);
  CHECK(os.str().rfind(std::string(csv::kAnalyticHeader), 0) == 0);
  CHECK_THROWS_AS(write_analytic(os, 1.0, 2.0, 0.1), analytic::DomainError);
}

TEST_CASE("census rows") {
  CensusOptions opts;
  opts.n = 200;
  opts.cls = GraphClass::planar;
  opts.ts = {100, 200, 400};
  opts.replicates = 2;
  opts.seed = 3;
  const auto rows = run_census(opts);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0].t == 100);
  CHECK(rows[2].census.forbidden >= rows[1].census.forbidden);
  for (const auto& row : rows) {
    CHECK(row.census.forbidden + row.census.addable + row.census.edges == pair_count(200));
  }
  opts.n = 5000;
  CHECK_THROWS_AS(run_census(opts), std::invalid_argument);
}

TEST_CASE("classify rows") {
  ClassifyOptions opts;
  opts.n = 500;
  opts.cls = GraphClass::planar;
  opts.t_lo = 500;
  opts.t_hi = 900;
  opts.replicates = 3;
  opts.seed = 2;
  const auto rows = run_classify(opts);
  REQUIRE(rows.size() == 3);
  for (const auto& row : rows) {
    const QueryTable& q = row.table;
    CHECK(q.inside_rejected + q.inside_accepted + q.outside_rejected + q.outside_accepted == 401);
  }
  opts.jobs = 2;
  const auto again = run_classify(opts);
  CHECK(again[2].table.inside_rejected == rows[2].table.inside_rejected);
}

TEST_CASE("decompose a process graph") {
  DecomposeOptions opts;
  opts.n = 3000;
  opts.cls = GraphClass::planar;
  opts.t = 4500;
  opts.seed = 5;
  const DecomposeResult r = run_decompose(opts);
  CHECK(r.issues.empty());
  CHECK(r.giant > 0);
  CHECK(r.a > 0);
  CHECK(excluded_clique(GraphClass::planar) == 5);
  CHECK(excluded_clique(GraphClass::cactus) == 4);
  std::size_t covered = 0;
  for (const auto& p : r.parts) covered += p.size();
  CHECK(covered <= r.giant);
  std::ostringstream os;
  write_parts(os, r);
  CHECK(!os.str().empty());
}
