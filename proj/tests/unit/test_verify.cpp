#include <doctest.h>

#include <algorithm>

#include "crgp/axioms.hpp"
#include "crgp/verify.hpp"

using namespace crgp;

namespace {

/// Planar oracle that wrongly refuses every edge inside a tree component.
class TreeRejectingOracle : public ConstraintOracle {
 public:
  TreeRejectingOracle() : ConstraintOracle(GraphClass::planar) {}
  Decision allows(const Graph& g, const ComponentTracker& tracker, Vertex u, Vertex v) const override {
    if (tracker.same_component(u, v) && tracker.is_tree_component(u)) return Decision::reject;
    return ConstraintOracle::allows(g, tracker, u, v);
  }
};

VerifyOptions small_options() {
  VerifyOptions opts;
  opts.ns = {60};
  opts.runs_per_cell = 1;
  opts.equivalence_max_n = 4;
  opts.decomposition_graphs = 50;
  opts.turan_samples = 30;
  opts.axiom_samples = 60;
  return opts;
}

}  // namespace

TEST_CASE("broken oracle is caught by the tree-component axiom") {
  const auto sample = sample_graphs(100, 7, 3);
  const TreeRejectingOracle broken;
  const AxiomReport r = axiom_check(broken, sample, 4);
  CHECK_FALSE(r.ok());
  CHECK(r.count('f') > 0);
  CHECK(r.count('e') == 0);
}

TEST_CASE("verification run with the real oracles") {
  const auto results = run_verification(small_options());
  CHECK_FALSE(results.empty());
  for (const CheckResult& r : results) {
    INFO(r.name << ": " << r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("verification flags an injected oracle") {
  VerifyOptions opts = small_options();
  opts.classes = {GraphClass::planar};
  opts.oracle_factory = [](GraphClass) -> std::unique_ptr<ConstraintOracle> {
    return std::make_unique<TreeRejectingOracle>();
  };
  const auto results = run_verification(opts);
  const auto it = std::find_if(results.begin(), results.end(),
                               [](const CheckResult& r) { return r.name == "axioms planar"; });
  REQUIRE(it != results.end());
  CHECK_FALSE(it->passed);
  CHECK(it->detail.find("axiom (f)") != std::string::npos);
}

TEST_CASE("unconstrained class reports axiom (a) as informational") {
  VerifyOptions opts = small_options();
  opts.classes = {GraphClass::unconstrained};
  const auto results = run_verification(opts);
  bool seen = false;
  for (const CheckResult& r : results) {
    CHECK(r.passed);
    if (r.informational) {
      seen = true;
      CHECK(r.name.find("(a)") != std::string::npos);
    }
  }
  CHECK(seen);
}
