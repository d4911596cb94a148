#include <algorithm>
#include <numeric>

#include "crgp/class_tests.hpp"

namespace crgp {

int PlanarityTester::lowest(const ConflictPair& p) const {
  if (p.left.empty()) return lowpt_[p.right.low];
  if (p.right.empty()) return lowpt_[p.left.low];
  return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
}

void PlanarityTester::orient(const LocalGraph& g) {
  const int n = g.order();
  const int m = g.size();
  height_.assign(n, -1);
  parent_edge_.assign(n, -1);
  iter_.assign(n, 0);
  // every edge gets oriented, which writes all of these before any read
  src_.resize(m);
  dst_.resize(m);
  lowpt_.resize(m);
  lowpt2_.resize(m);
  nesting_.resize(m);
  oriented_.assign(m, 0);
  roots_.clear();

  for (int s = 0; s < n; ++s) {
    if (height_[s] != -1) continue;
    height_[s] = 0;
    roots_.push_back(s);
    dfs_.assign(1, s);
    while (!dfs_.empty()) {
      const int v = dfs_.back();
      const int e = parent_edge_[v];
      const auto nb = g.neighbors(v);
      const auto inc = g.incident(v);
      bool descended = false;
      while (iter_[v] < static_cast<int>(nb.size())) {
        const int w = nb[iter_[v]];
        const int ei = inc[iter_[v]];
        if (oriented_[ei] && src_[ei] != v) {
          ++iter_[v];
          continue;
        }
        if (!oriented_[ei]) {
          oriented_[ei] = 1;
          src_[ei] = v;
          dst_[ei] = w;
          lowpt_[ei] = height_[v];
          lowpt2_[ei] = height_[v];
          if (height_[w] == -1) {  // tree edge
            parent_edge_[w] = ei;
            height_[w] = height_[v] + 1;
            dfs_.push_back(w);
            descended = true;
            break;
          }
          lowpt_[ei] = height_[w];  // back edge
        }
        nesting_[ei] = 2 * lowpt_[ei] + (lowpt2_[ei] < height_[v] ? 1 : 0);
        if (e != -1) {
          if (lowpt_[ei] < lowpt_[e]) {
            lowpt2_[e] = std::min(lowpt_[e], lowpt2_[ei]);
            lowpt_[e] = lowpt_[ei];
          } else if (lowpt_[ei] > lowpt_[e]) {
            lowpt2_[e] = std::min(lowpt2_[e], lowpt_[ei]);
          } else {
            lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[ei]);
          }
        }
        ++iter_[v];
      }
      if (!descended) dfs_.pop_back();
    }
  }

  // outgoing edges per vertex, ordered by nesting depth
  out_offset_.assign(n + 1, 0);
  for (int e = 0; e < m; ++e) ++out_offset_[src_[e] + 1];
  for (int v = 0; v < n; ++v) out_offset_[v + 1] += out_offset_[v];
  // bucket sort by nesting depth (at most 2n+1), then distribute by source;
  // ties keep edge-id order
  bucket_.assign(2 * static_cast<std::size_t>(n) + 3, 0);
  for (int e = 0; e < m; ++e) ++bucket_[nesting_[e] + 1];
  for (std::size_t i = 1; i < bucket_.size(); ++i) bucket_[i] += bucket_[i - 1];
  by_nesting_.resize(m);
  for (int e = 0; e < m; ++e) by_nesting_[bucket_[nesting_[e]]++] = e;
  out_edges_.resize(m);
  fill_.assign(out_offset_.begin(), out_offset_.end() - 1);
  for (int e : by_nesting_) out_edges_[fill_[src_[e]]++] = e;
}

bool PlanarityTester::add_constraints(int ei, int e) {
  ConflictPair p;
  p.id = next_id_++;
  // merge return edges of ei into p.right
  while (true) {
    ConflictPair q = stack_.back();
    stack_.pop_back();
    if (!q.left.empty()) std::swap(q.left, q.right);
    if (!q.left.empty()) return false;
    if (lowpt_[q.right.low] > lowpt_[e]) {
      if (p.right.empty()) {
        p.right.high = q.right.high;
      } else {
        ref_[p.right.low] = q.right.high;
      }
      p.right.low = q.right.low;
    } else {
      ref_[q.right.low] = lowpt_edge_[e];
    }
    if (top_id() == stack_bottom_[ei]) break;
  }
  // merge conflicting return edges of the earlier siblings into p.left
  while (!stack_.empty() &&
         (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
    ConflictPair q = stack_.back();
    stack_.pop_back();
    if (conflicting(q.right, ei)) std::swap(q.left, q.right);
    if (conflicting(q.right, ei)) return false;
    if (p.right.low != -1) ref_[p.right.low] = q.right.high;
    if (q.right.low != -1) p.right.low = q.right.low;
    if (p.left.empty()) {
      p.left.high = q.left.high;
    } else {
      ref_[p.left.low] = q.left.high;
    }
    p.left.low = q.left.low;
  }
  if (!(p.left.empty() && p.right.empty())) stack_.push_back(p);
  return true;
}

void PlanarityTester::remove_back_edges(int e) {
  const int u = src_[e];
  // Side assignments are only needed to build an embedding, so popped pairs
  // are simply dropped.
  while (!stack_.empty() && lowest(stack_.back()) == height_[u]) stack_.pop_back();
  if (!stack_.empty()) {
    ConflictPair p = stack_.back();
    stack_.pop_back();
    while (p.left.high != -1 && dst_[p.left.high] == u) p.left.high = ref_[p.left.high];
    if (p.left.high == -1 && p.left.low != -1) {
      ref_[p.left.low] = p.right.low;
      p.left.low = -1;
    }
    while (p.right.high != -1 && dst_[p.right.high] == u) p.right.high = ref_[p.right.high];
    if (p.right.high == -1 && p.right.low != -1) {
      ref_[p.right.low] = p.left.low;
      p.right.low = -1;
    }
    stack_.push_back(p);
  }
  if (lowpt_[e] < height_[u] && !stack_.empty()) {
    const int hl = stack_.back().left.high;
    const int hr = stack_.back().right.high;
    if (hl != -1 && (hr == -1 || lowpt_[hl] > lowpt_[hr])) {
      ref_[e] = hl;
    } else {
      ref_[e] = hr;
    }
  }
}

bool PlanarityTester::test_from(int root) {
  stack_.clear();
  dfs_.assign(1, root);
  while (!dfs_.empty()) {
    const int v = dfs_.back();
    dfs_.pop_back();
    const int e = parent_edge_[v];
    bool descended = false;
    const int begin = out_offset_[v];
    const int end = out_offset_[v + 1];
    while (begin + iter_[v] < end) {
      const int ei = out_edges_[begin + iter_[v]];
      const int w = dst_[ei];
      if (!skip_final_[ei]) {
        stack_bottom_[ei] = top_id();
        if (ei == parent_edge_[w]) {
          dfs_.push_back(v);
          dfs_.push_back(w);
          skip_final_[ei] = 1;
          descended = true;
          break;
        }
        lowpt_edge_[ei] = ei;
        ConflictPair p;
        p.id = next_id_++;
        p.right = Interval{ei, ei};
        stack_.push_back(p);
      }
      if (lowpt_[ei] < height_[v]) {
        if (ei == out_edges_[begin]) {
          lowpt_edge_[e] = lowpt_edge_[ei];
        } else if (!add_constraints(ei, e)) {
          return false;
        }
      }
      ++iter_[v];
    }
    if (!descended && e != -1) remove_back_edges(e);
  }
  return true;
}

bool PlanarityTester::is_planar(const LocalGraph& g) {
  const int n = g.order();
  const int m = g.size();
  if (n >= 3 && m > 3 * n - 6) return false;
  if (m <= 8) {
    // fewer than 9 edges cannot contain a subdivision of K5 or K3,3
    return true;
  }
  orient(g);
  iter_.assign(n, 0);
  skip_final_.assign(m, 0);
  lowpt_edge_.resize(m);    // written before read
  stack_bottom_.resize(m);  // written before read
  ref_.assign(m, -1);
  next_id_ = 0;
  for (int root : roots_) {
    if (!test_from(root)) return false;
  }
  return true;
}

bool is_planar(const LocalGraph& g) {
  PlanarityTester t;
  return t.is_planar(g);
}

}  // namespace crgp
