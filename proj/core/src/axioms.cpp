#include "crgp/axioms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "crgp/edge_stream.hpp"

namespace crgp {

std::size_t AxiomReport::count(char axiom) const {
  return static_cast<std::size_t>(std::count_if(violations.begin(), violations.end(),
                                                [axiom](const auto& v) { return v.axiom == axiom; }));
}

Graph contract_edge(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw GraphError("contract_edge: not an edge");
  auto image = [u, v](Vertex x) {
    if (x == v) x = u;
    return x > v ? x - 1 : x;
  };
  Graph out(g.order() - 1);
  for (const Edge& e : g.edges()) {
    const Vertex a = image(e.u);
    const Vertex b = image(e.v);
    if (a != b && !out.has_edge(a, b)) out.add_edge(a, b);
  }
  return out;
}

std::vector<Graph> sample_graphs(std::size_t count, Vertex max_n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<Vertex>(1 + rng.below(max_n));
    const double p = rng.uniform();
    Graph g(n);
    for (Vertex a = 1; a <= n; ++a) {
      for (Vertex b = a + 1; b <= n; ++b) {
        if (rng.uniform() < p) g.add_edge(a, b);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

namespace {

std::string describe(const Graph& g) {
  std::ostringstream os;
  os << "n=" << g.order() << " edges={";
  bool first = true;
  for (const Edge& e : g.edges()) {
    os << (first ? "" : " ") << e.u << "-" << e.v;
    first = false;
  }
  os << "}";
  return os.str();
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  Graph out(g.order());
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u - 1], perm[e.v - 1]);
  return out;
}

}  // namespace

AxiomReport axiom_check(const ConstraintOracle& oracle, const std::vector<Graph>& sample,
                        std::uint64_t seed) {
  AxiomReport report;
  Rng rng(seed);
  auto flag = [&report](char axiom, std::string detail) {
    report.violations.push_back({axiom, std::move(detail)});
  };

  for (Vertex n = 1; n <= 8; ++n) {
    if (!oracle.is_member(Graph(n))) flag('b', "edgeless graph on " + std::to_string(n) + " vertices rejected");
  }

  bool any_rejected = false;
  for (const Graph& g : sample) {
    ++report.graphs_checked;
    const bool member = oracle.is_member(g);
    any_rejected = any_rejected || !member;

    std::vector<Vertex> perm(g.order());
    std::iota(perm.begin(), perm.end(), Vertex{1});
    for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng.below(i)]);
    if (oracle.is_member(relabel(g, perm)) != member) flag('c', "relabeling changes membership of " + describe(g));

    if (!member) continue;
    for (const Edge& e : g.edges()) {
      Graph minus(g.order());
      for (const Edge& f : g.edges()) {
        if (f != e) minus.add_edge(f.u, f.v);
      }
      if (!oracle.is_member(minus)) flag('d', "deleting " + std::to_string(e.u) + "-" + std::to_string(e.v) + " leaves the class: " + describe(g));
      if (!oracle.is_member(contract_edge(g, e.u, e.v))) flag('d', "contracting " + std::to_string(e.u) + "-" + std::to_string(e.v) + " leaves the class: " + describe(g));
    }

    const ComponentTracker tracker = ComponentTracker::from_graph(g);
    for (Vertex u = 1; u <= g.order(); ++u) {
      for (Vertex v = u + 1; v <= g.order(); ++v) {
        if (g.has_edge(u, v)) continue;
        const bool same = tracker.same_component(u, v);
        if (!same && oracle.allows(g, tracker, u, v) != Decision::accept) {
          flag('e', "pair " + std::to_string(u) + "-" + std::to_string(v) + " between components rejected: " + describe(g));
        }
        if (same && tracker.is_tree_component(u) && oracle.allows(g, tracker, u, v) != Decision::accept) {
          flag('f', "pair " + std::to_string(u) + "-" + std::to_string(v) + " inside a tree component rejected: " + describe(g));
        }
      }
    }
  }

  if (!any_rejected) {
    report.rejects_nothing = true;
    if (oracle.graph_class() == GraphClass::unconstrained) {
      report.informational_a = true;
    } else {
      flag('a', "no graph in the sample was rejected");
    }
  }
  return report;
}

}  // namespace crgp
