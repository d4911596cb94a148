#include "crgp/minor.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace crgp {
namespace {

std::uint16_t drop_bit(std::uint16_t mask, int b) {
  const std::uint16_t low = mask & static_cast<std::uint16_t>((1u << b) - 1u);
  const std::uint16_t high = static_cast<std::uint16_t>((mask >> (b + 1)) << b);
  return low | high;
}

}  // namespace

int MinorTester::Small::edges() const {
  int twice = 0;
  for (int i = 0; i < n; ++i) twice += std::popcount(adj[i]);
  return twice / 2;
}

MinorTester::MinorTester(const Graph& pattern) {
  if (pattern.order() > kMaxMinorHost) throw MinorSizeError("minor pattern larger than 10 vertices");
  pattern_.n = static_cast<int>(pattern.order());
  for (const Edge& e : pattern.edges()) {
    pattern_.adj[e.u - 1] |= static_cast<std::uint16_t>(1u << (e.v - 1));
    pattern_.adj[e.v - 1] |= static_cast<std::uint16_t>(1u << (e.u - 1));
  }
  pattern_edges_ = pattern_.edges();
  pattern_order_.resize(pattern_.n);
  std::iota(pattern_order_.begin(), pattern_order_.end(), 0);
  std::stable_sort(pattern_order_.begin(), pattern_order_.end(), [this](int a, int b) {
    return std::popcount(pattern_.adj[a]) > std::popcount(pattern_.adj[b]);
  });
}

MinorTester::Small MinorTester::remove_vertex(const Small& g, int x) {
  Small out;
  out.n = g.n - 1;
  int j = 0;
  for (int i = 0; i < g.n; ++i) {
    if (i == x) continue;
    out.adj[j++] = drop_bit(g.adj[i], x);
  }
  return out;
}

MinorTester::Small MinorTester::contract(const Small& g, int a, int b) {
  Small merged = g;
  std::uint16_t joined = g.adj[a] | g.adj[b];
  joined &= static_cast<std::uint16_t>(~((1u << a) | (1u << b)));
  merged.adj[a] = joined;
  for (int i = 0; i < g.n; ++i) {
    if (i == a || i == b) continue;
    if (g.adj[i] & (1u << b)) merged.adj[i] |= static_cast<std::uint16_t>(1u << a);
  }
  return remove_vertex(merged, b);
}

std::uint64_t MinorTester::signature(const Small& g) {
  std::array<int, kMaxMinorHost> order{};
  std::iota(order.begin(), order.begin() + g.n, 0);
  std::stable_sort(order.begin(), order.begin() + g.n, [&g](int a, int b) {
    return std::popcount(g.adj[a]) > std::popcount(g.adj[b]);
  });
  std::uint64_t key = 0;
  int bit = 0;
  for (int i = 0; i < g.n; ++i) {
    for (int j = i + 1; j < g.n; ++j) {
      if (g.adj[order[i]] & (1u << order[j])) key |= std::uint64_t{1} << bit;
      ++bit;
    }
  }
  return key | (static_cast<std::uint64_t>(g.n) << 56);
}

bool MinorTester::spanning_subgraph(const Small& g) const {
  // injective map pattern -> host, pattern vertices in decreasing degree order
  const int n = pattern_.n;
  std::array<int, kMaxMinorHost> image{};
  std::uint16_t used = 0;
  int depth = 0;
  std::array<int, kMaxMinorHost + 1> next{};
  next[0] = 0;
  while (depth >= 0) {
    if (depth == n) return true;
    const int p = pattern_order_[depth];
    bool placed = false;
    for (int h = next[depth]; h < g.n; ++h) {
      if (used & (1u << h)) continue;
      if (std::popcount(g.adj[h]) < std::popcount(pattern_.adj[p])) continue;
      bool ok = true;
      for (int k = 0; k < depth && ok; ++k) {
        const int q = pattern_order_[k];
        if ((pattern_.adj[p] & (1u << q)) && !(g.adj[h] & (1u << image[q]))) ok = false;
      }
      if (!ok) continue;
      image[p] = h;
      used |= static_cast<std::uint16_t>(1u << h);
      next[depth] = h + 1;
      ++depth;
      next[depth] = 0;
      placed = true;
      break;
    }
    if (!placed) {
      --depth;
      if (depth >= 0) used &= static_cast<std::uint16_t>(~(1u << image[pattern_order_[depth]]));
    }
  }
  return false;
}

bool MinorTester::search(const Small& g) {
  if (g.n < pattern_.n || g.edges() < pattern_edges_) return false;
  if (g.n == pattern_.n) return spanning_subgraph(g);
  const std::uint64_t key = signature(g);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool found = false;
  for (int x = 0; x < g.n && !found; ++x) found = search(remove_vertex(g, x));
  for (int a = 0; a < g.n && !found; ++a) {
    for (int b = a + 1; b < g.n && !found; ++b) {
      if (g.adj[a] & (1u << b)) found = search(contract(g, a, b));
    }
  }
  memo_.emplace(key, found);
  return found;
}

bool MinorTester::is_minor_of(const Graph& host) {
  if (host.order() > kMaxMinorHost) {
    throw MinorSizeError("has_minor: host has " + std::to_string(host.order()) +
                         " vertices (limit 10)");
  }
  Small g;
  g.n = static_cast<int>(host.order());
  for (const Edge& e : host.edges()) {
    g.adj[e.u - 1] |= static_cast<std::uint16_t>(1u << (e.v - 1));
    g.adj[e.v - 1] |= static_cast<std::uint16_t>(1u << (e.u - 1));
  }
  return search(g);
}

bool has_minor(const Graph& host, const Graph& pattern) {
  MinorTester t(pattern);
  return t.is_minor_of(host);
}

MinorMembership::MinorMembership(GraphClass cls) {
  for (const Graph& h : forbidden_minors(cls)) testers_.emplace_back(h);
}

bool MinorMembership::is_member(const Graph& g) {
  for (auto& t : testers_) {
    if (t.is_minor_of(g)) return false;
  }
  return true;
}

}  // namespace crgp
