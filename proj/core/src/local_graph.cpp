#include "crgp/local_graph.hpp"

namespace crgp {

void LocalGraph::reset(int n) {
  n_ = n;
  edges_.clear();
  offset_.clear();
  adj_.clear();
  eid_.clear();
}

void LocalGraph::finalize() {
  offset_.assign(static_cast<std::size_t>(n_) + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++offset_[u + 1];
    ++offset_[v + 1];
  }
  for (int i = 0; i < n_; ++i) offset_[i + 1] += offset_[i];
  adj_.resize(2 * edges_.size());
  eid_.resize(2 * edges_.size());
  std::vector<int> fill(offset_.begin(), offset_.end() - 1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto [u, v] = edges_[e];
    adj_[fill[u]] = v;
    eid_[fill[u]++] = e;
    adj_[fill[v]] = u;
    eid_[fill[v]++] = e;
  }
}

LocalGraph LocalGraph::from_graph(const Graph& g) {
  LocalGraph lg(static_cast<int>(g.order()));
  for (const Edge& e : g.edges()) lg.add_edge(static_cast<int>(e.u) - 1, static_cast<int>(e.v) - 1);
  lg.finalize();
  return lg;
}

}  // namespace crgp
