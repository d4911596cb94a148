#include "crgp/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace crgp {

double WeightedGraph::total() const { return std::accumulate(weight.begin(), weight.end(), 0.0); }

double WeightedGraph::max_weight() const {
  return weight.empty() ? 0.0 : *std::max_element(weight.begin(), weight.end());
}

namespace {

bool connected_on(const Graph& g, const std::vector<char>& alive, std::size_t alive_count) {
  if (alive_count == 0) return true;
  Vertex start = 0;
  for (Vertex v = 1; v <= g.order(); ++v) {
    if (alive[v - 1]) {
      start = v;
      break;
    }
  }
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> queue{start};
  seen[start - 1] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : g.neighbors(queue[i])) {
      if (alive[w - 1] && !seen[w - 1]) {
        seen[w - 1] = 1;
        queue.push_back(w);
      }
    }
  }
  return queue.size() == alive_count;
}

}  // namespace

Decomposition weighted_decomposition(const WeightedGraph& h, double a, std::size_t max_degree,
                                     double max_weight) {
  const Graph& g = h.base;
  const Vertex n = g.order();
  if (h.weight.size() != n) throw DecompositionError("decomposition: one weight per vertex required");
  if (!(a > 0)) throw DecompositionError("decomposition: a must be positive");
  for (Vertex v = 1; v <= n; ++v) {
    if (!(h.weight[v - 1] > 0)) {
      throw DecompositionError("decomposition: weight of vertex " + std::to_string(v) +
                               " is not positive");
    }
    if (h.weight[v - 1] > max_weight) {
      throw DecompositionError("decomposition: weight of vertex " + std::to_string(v) +
                               " exceeds the bound M");
    }
    if (g.degree(v) > max_degree) {
      throw DecompositionError("decomposition: degree of vertex " + std::to_string(v) +
                               " exceeds the bound");
    }
  }
  std::vector<char> alive(n, 1);
  if (!connected_on(g, alive, n)) throw DecompositionError("decomposition: graph is disconnected");

  Decomposition out;
  std::size_t alive_count = n;
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, 0);
  std::vector<double> sub(n, 0.0);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> sorted_nbrs;

  for (;;) {
    double remaining = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (alive[v - 1]) remaining += h.weight[v - 1];
    }
    if (alive_count == 0 || remaining < a) {
      out.leftover = remaining;
      break;
    }
    Vertex root = 0;
    for (Vertex v = 1; v <= n && !root; ++v) {
      if (alive[v - 1]) root = v;
    }
    // BFS over the remaining vertices, children visited by increasing label
    order.assign(1, root);
    std::fill(seen.begin(), seen.end(), 0);
    seen[root - 1] = 1;
    parent[root - 1] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Vertex x = order[i];
      sorted_nbrs.assign(g.neighbors(x).begin(), g.neighbors(x).end());
      std::sort(sorted_nbrs.begin(), sorted_nbrs.end());
      for (Vertex w : sorted_nbrs) {
        if (alive[w - 1] && !seen[w - 1]) {
          seen[w - 1] = 1;
          parent[w - 1] = x;
          order.push_back(w);
        }
      }
    }
    for (Vertex x : order) sub[x - 1] = h.weight[x - 1];
    for (std::size_t i = order.size(); i-- > 1;) {
      const Vertex x = order[i];
      sub[parent[x - 1] - 1] += sub[x - 1];
    }
    Vertex z = 0;
    for (Vertex x : order) {
      if (sub[x - 1] < a) continue;
      if (z == 0 || sub[x - 1] < sub[z - 1] || (sub[x - 1] == sub[z - 1] && x < z)) z = x;
    }
    // D_z: z and its BFS descendants, i.e. the vertices whose ancestor chain hits z
    std::vector<char> in_part(n, 0);
    in_part[z - 1] = 1;
    std::vector<Vertex> part;
    for (Vertex x : order) {
      if (x != z && parent[x - 1] != 0 && in_part[parent[x - 1] - 1]) in_part[x - 1] = 1;
      if (in_part[x - 1]) part.push_back(x);
    }
    std::sort(part.begin(), part.end());
    for (Vertex x : part) alive[x - 1] = 0;
    alive_count -= part.size();
    out.part_weights.push_back(sub[z - 1]);
    out.parts.push_back(std::move(part));
  }
  return out;
}

std::vector<std::string> check_decomposition(const WeightedGraph& h, double a,
                                             std::size_t max_degree, double max_weight,
                                             const Decomposition& d) {
  std::vector<std::string> issues;
  const Graph& g = h.base;
  const Vertex n = g.order();
  const double total = h.total();
  const double slack = 1e-9 * std::max(1.0, total);
  std::vector<char> used(n, 0);
  double covered = 0;
  if (d.parts.size() != d.part_weights.size()) issues.emplace_back("part count mismatch");
  for (std::size_t i = 0; i < d.parts.size(); ++i) {
    const auto& part = d.parts[i];
    std::ostringstream tag;
    tag << "part " << i + 1 << ": ";
    if (part.empty()) {
      issues.push_back(tag.str() + "empty");
      continue;
    }
    double w = 0;
    std::vector<char> alive(n, 0);
    bool in_range = true;
    for (Vertex v : part) {
      if (v < 1 || v > n) {
        in_range = false;
        break;
      }
      if (used[v - 1]) issues.push_back(tag.str() + "vertex " + std::to_string(v) + " reused");
      used[v - 1] = 1;
      alive[v - 1] = 1;
      w += h.weight[v - 1];
    }
    if (!in_range) {
      issues.push_back(tag.str() + "vertex out of range");
      continue;
    }
    covered += w;
    if (!connected_on(g, alive, part.size())) issues.push_back(tag.str() + "not connected");
    if (w < a - slack) issues.push_back(tag.str() + "weight below a");
    if (w > a * static_cast<double>(max_degree) + max_weight + slack) {
      issues.push_back(tag.str() + "weight above a*Delta + M");
    }
    if (i < d.part_weights.size() && std::abs(w - d.part_weights[i]) > slack) {
      issues.push_back(tag.str() + "recorded weight differs");
    }
  }
  if (total - covered >= a + slack) issues.emplace_back("uncovered weight not below a");
  if (std::abs((total - covered) - d.leftover) > slack) issues.emplace_back("leftover mismatch");
  return issues;
}

}  // namespace crgp
