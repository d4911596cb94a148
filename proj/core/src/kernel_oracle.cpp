#include "crgp/kernel_oracle.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace crgp {

IncrementalOracle::IncrementalOracle(const ConstraintOracle& oracle, Vertex n)
    : oracle_(&oracle),
      skeleton_(oracle.graph_class() == GraphClass::planar ||
                oracle.graph_class() == GraphClass::series_parallel),
      graph_(n),
      tracker_(n),
      attach_(n, 0),
      toward_(n, 0),
      branch_index_(n, -1),
      chain_of_(n, -1),
      chain_pos_(n, 0),
      stamp_(n, 0),
      core_deg_(n, 0),
      in_core_(n, 0) {}

IncrementalOracle::IncrementalOracle(const ConstraintOracle& oracle, const Graph& initial)
    : IncrementalOracle(oracle, initial.order()) {
  for (const Edge& e : initial.edges()) add_edge(e.u, e.v);
}

void IncrementalOracle::relabel_tree_side(Vertex tree_start, Vertex blocked, Vertex attach_to) {
  ++epoch_;
  stamp_[blocked - 1] = epoch_;
  stamp_[tree_start - 1] = epoch_;
  toward_[tree_start - 1] = blocked;
  queue_.assign(1, tree_start);
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const Vertex x = queue_[i];
    attach_[x - 1] = attach_to;
    in_core_[x - 1] = 0;
    branch_index_[x - 1] = -1;
    chain_of_[x - 1] = -1;
    for (Vertex w : graph_.neighbors(x)) {
      if (stamp_[w - 1] != epoch_) {
        stamp_[w - 1] = epoch_;
        toward_[w - 1] = x;
        queue_.push_back(w);
      }
    }
  }
}

void IncrementalOracle::attach_subtree(Vertex start, Vertex core_vertex) {
  toward_[start - 1] = core_vertex;
  queue_.assign(1, start);
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const Vertex x = queue_[i];
    attach_[x - 1] = core_vertex;
    for (Vertex w : graph_.neighbors(x)) {
      if (w != toward_[x - 1]) {
        toward_[w - 1] = x;
        queue_.push_back(w);
      }
    }
  }
}

void IncrementalOracle::grow_core(Kernel& k, Vertex u, Vertex v) {
  // walk both endpoints down to the core; the walks may share a tail
  std::vector<Vertex> fresh;
  for (Vertex start : {u, v}) {
    for (Vertex x = start; !in_core_[x - 1]; x = toward_[x - 1]) {
      in_core_[x - 1] = 1;
      fresh.push_back(x);
    }
  }
  for (Vertex x : fresh) {
    attach_[x - 1] = x;
    toward_[x - 1] = 0;
    k.core.push_back(x);
  }
  // trees hanging off the new core vertices now attach there
  for (Vertex x : fresh) {
    for (Vertex w : graph_.neighbors(x)) {
      if (!in_core_[w - 1]) attach_subtree(w, x);
    }
  }
  std::vector<Vertex> touched = fresh;
  touched.push_back(u);
  touched.push_back(v);
  for (Vertex x : fresh) {
    for (Vertex w : graph_.neighbors(x)) touched.push_back(w);
  }
  for (Vertex x : touched) {
    if (!in_core_[x - 1]) continue;
    int d = 0;
    for (Vertex w : graph_.neighbors(x)) d += in_core_[w - 1];
    core_deg_[x - 1] = d;
  }
  index_core(k);
}

void IncrementalOracle::add_edge(Vertex u, Vertex v) {
  const Vertex ru = tracker_.find(u);
  const Vertex rv = tracker_.find(v);
  const bool tree_u = tracker_.is_tree_component(u);
  const bool tree_v = tracker_.is_tree_component(v);
  graph_.add_edge(u, v);
  tracker_.add_edge(u, v);
  if (ru == rv) {
    if (tree_u) return;
    auto it = kernels_.find(ru);
    if (it != kernels_.end()) grow_core(it->second, u, v);
    return;
  }
  if (tree_u && tree_v) return;
  if (tree_u != tree_v) {
    // A tree hangs off a non-tree component: the core is unchanged and the
    // whole tree attaches where its neighbor attaches.
    const Vertex core_root = tree_u ? rv : ru;
    const Vertex tree_vertex = tree_u ? u : v;
    const Vertex anchor = tree_u ? v : u;
    auto node = kernels_.extract(core_root);
    if (node.empty()) return;
    relabel_tree_side(tree_vertex, anchor, attach_[anchor - 1]);
    node.key() = tracker_.find(u);
    kernels_.insert(std::move(node));
    return;
  }
  // bridge between two non-tree components: the path between the two cores
  // joins the core
  kernels_.erase(ru);
  kernels_.erase(rv);
}

IncrementalOracle::Kernel& IncrementalOracle::kernel_for(Vertex root, Vertex any) {
  auto it = kernels_.find(root);
  if (it != kernels_.end()) return it->second;
  Kernel& k = kernels_[root];
  rebuild(k, any);
  return k;
}

void IncrementalOracle::rebuild(Kernel& k, Vertex any) {
  ++rebuilds_;
  k = Kernel{};
  ++epoch_;
  std::vector<Vertex> comp;
  comp.push_back(any);
  stamp_[any - 1] = epoch_;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (Vertex w : graph_.neighbors(comp[i])) {
      if (stamp_[w - 1] != epoch_) {
        stamp_[w - 1] = epoch_;
        comp.push_back(w);
      }
    }
  }

  // peel to the 2-core
  queue_.clear();
  for (Vertex x : comp) {
    core_deg_[x - 1] = static_cast<int>(graph_.degree(x));
    in_core_[x - 1] = 1;
    attach_[x - 1] = 0;
    toward_[x - 1] = 0;
    branch_index_[x - 1] = -1;
    chain_of_[x - 1] = -1;
    if (core_deg_[x - 1] < 2) {
      in_core_[x - 1] = 0;
      queue_.push_back(x);
    }
  }
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    for (Vertex w : graph_.neighbors(queue_[i])) {
      if (in_core_[w - 1] && --core_deg_[w - 1] < 2) {
        in_core_[w - 1] = 0;
        queue_.push_back(w);
      }
    }
  }

  // pendant trees attach to their nearest core vertex
  queue_.clear();
  for (Vertex x : comp) {
    if (in_core_[x - 1]) {
      attach_[x - 1] = x;
      toward_[x - 1] = 0;
      queue_.push_back(x);
      k.core.push_back(x);
    }
  }
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const Vertex x = queue_[i];
    for (Vertex w : graph_.neighbors(x)) {
      if (attach_[w - 1] == 0) {
        attach_[w - 1] = attach_[x - 1];
        toward_[w - 1] = x;
        queue_.push_back(w);
      }
    }
  }
  index_core(k);
}

void IncrementalOracle::index_core(Kernel& k) {
  k.branch.clear();
  k.chain_a.clear();
  k.chain_b.clear();
  k.chain_len.clear();
  k.simple.clear();
  k.simple_mult.clear();
  k.chain_simple.clear();
  for (Vertex x : k.core) {
    branch_index_[x - 1] = -1;
    chain_of_[x - 1] = -1;
  }

  // branch vertices; a bare cycle gets its smallest label as the single one
  for (Vertex x : k.core) {
    if (core_deg_[x - 1] >= 3) {
      branch_index_[x - 1] = static_cast<int>(k.branch.size());
      k.branch.push_back(x);
    }
  }
  if (k.branch.empty()) {
    const Vertex lowest = *std::min_element(k.core.begin(), k.core.end());
    branch_index_[lowest - 1] = 0;
    k.branch.push_back(lowest);
  }

  // maximal chains of core-degree-2 vertices between branch vertices
  for (std::size_t bi = 0; bi < k.branch.size(); ++bi) {
    const Vertex b = k.branch[bi];
    for (Vertex w : graph_.neighbors(b)) {
      if (!in_core_[w - 1]) continue;
      if (branch_index_[w - 1] >= 0) {
        if (b < w) {
          k.chain_a.push_back(static_cast<int>(bi));
          k.chain_b.push_back(branch_index_[w - 1]);
          k.chain_len.push_back(1);
        }
        continue;
      }
      if (chain_of_[w - 1] != -1) continue;
      const int id = static_cast<int>(k.chain_len.size());
      Vertex prev = b;
      Vertex cur = w;
      int pos = 1;
      while (branch_index_[cur - 1] < 0) {
        chain_of_[cur - 1] = id;
        chain_pos_[cur - 1] = pos++;
        Vertex next = 0;
        for (Vertex z : graph_.neighbors(cur)) {
          if (in_core_[z - 1] && z != prev) {
            next = z;
            break;
          }
        }
        prev = cur;
        cur = next;
      }
      k.chain_a.push_back(static_cast<int>(bi));
      k.chain_b.push_back(branch_index_[cur - 1]);
      k.chain_len.push_back(pos);
    }
  }
  build_blocks(k);
  if (skeleton_) build_skeleton(k);
}

void IncrementalOracle::build_blocks(Kernel& k) {
  const int nb = static_cast<int>(k.branch.size());
  const int chains = static_cast<int>(k.chain_len.size());
  std::vector<int> start(nb + 1, 0);
  for (int c = 0; c < chains; ++c) {
    if (k.chain_a[c] == k.chain_b[c]) continue;
    ++start[k.chain_a[c] + 1];
    ++start[k.chain_b[c] + 1];
  }
  for (int i = 0; i < nb; ++i) start[i + 1] += start[i];
  std::vector<std::pair<int, int>> adj(start[nb]);
  {
    std::vector<int> fill(start.begin(), start.end() - 1);
    for (int c = 0; c < chains; ++c) {
      const int a = k.chain_a[c];
      const int b = k.chain_b[c];
      if (a == b) continue;
      adj[fill[a]++] = {b, c};
      adj[fill[b]++] = {a, c};
    }
  }

  k.chain_block.assign(chains, -1);
  k.block_chains.clear();
  for (int c = 0; c < chains; ++c) {
    if (k.chain_a[c] != k.chain_b[c]) continue;
    k.chain_block[c] = static_cast<int>(k.block_chains.size());
    k.block_chains.push_back({c});
  }

  // Tarjan's edge-stack biconnected components; parallel chains are told
  // apart by chain id
  struct Frame {
    int v;
    int via;
    int it;
  };
  disc_.assign(nb, -1);
  low_.assign(nb, 0);
  std::vector<int> estack;
  std::vector<Frame> st;
  int time = 0;
  for (int r = 0; r < nb; ++r) {
    if (disc_[r] != -1) continue;
    disc_[r] = low_[r] = time++;
    st.push_back({r, -1, start[r]});
    while (!st.empty()) {
      Frame& f = st.back();
      if (f.it < start[f.v + 1]) {
        const auto [w, c] = adj[f.it++];
        if (c == f.via) continue;
        if (disc_[w] == -1) {
          estack.push_back(c);
          disc_[w] = low_[w] = time++;
          st.push_back({w, c, start[w]});
        } else if (disc_[w] < disc_[f.v]) {
          estack.push_back(c);
          low_[f.v] = std::min(low_[f.v], disc_[w]);
        }
        continue;
      }
      const int w = f.v;
      const int via = f.via;
      st.pop_back();
      if (st.empty()) break;
      const int v = st.back().v;
      low_[v] = std::min(low_[v], low_[w]);
      if (low_[w] >= disc_[v]) {
        const int id = static_cast<int>(k.block_chains.size());
        k.block_chains.emplace_back();
        int c;
        do {
          c = estack.back();
          estack.pop_back();
          k.chain_block[c] = id;
          k.block_chains.back().push_back(c);
        } while (c != via);
      }
    }
  }

  const int blocks = static_cast<int>(k.block_chains.size());
  k.vertex_blocks.assign(nb, {});
  for (int b = 0; b < blocks; ++b) {
    for (int c : k.block_chains[b]) {
      for (int v : {k.chain_a[c], k.chain_b[c]}) {
        auto& vb = k.vertex_blocks[v];
        if (vb.empty() || vb.back() != b) vb.push_back(b);
      }
    }
  }
  k.block_cuts.assign(blocks, {});
  for (int v = 0; v < nb; ++v) {
    if (k.vertex_blocks[v].size() < 2) continue;
    for (int b : k.vertex_blocks[v]) k.block_cuts[b].push_back(v);
  }
}

void IncrementalOracle::select_blocks(const Kernel& k, const Point& px, const Point& py) {
  const int blocks = static_cast<int>(k.block_chains.size());
  const auto node = [&](const Point& p) {
    if (p.branch < 0) return k.chain_block[p.chain];
    const auto& vb = k.vertex_blocks[p.branch];
    return vb.size() == 1 ? vb[0] : blocks + p.branch;
  };
  const int s = node(px);
  const int t = node(py);
  sel_blocks_.clear();
  if (s == t) {
    sel_blocks_.push_back(s);
  } else {
    const std::size_t total = static_cast<std::size_t>(blocks) + k.branch.size();
    if (bc_stamp_.size() < total) {
      bc_stamp_.resize(total, 0);
      bc_parent_.resize(total, -1);
    }
    ++bc_epoch_;
    bc_stamp_[s] = bc_epoch_;
    bc_queue_.assign(1, s);
    const auto visit = [&](int from, int to) {
      if (bc_stamp_[to] == bc_epoch_) return;
      bc_stamp_[to] = bc_epoch_;
      bc_parent_[to] = from;
      bc_queue_.push_back(to);
    };
    for (std::size_t i = 0; i < bc_queue_.size() && bc_stamp_[t] != bc_epoch_; ++i) {
      const int cur = bc_queue_[i];
      if (cur < blocks) {
        for (int v : k.block_cuts[cur]) visit(cur, blocks + v);
      } else {
        for (int b : k.vertex_blocks[cur - blocks]) visit(cur, b);
      }
    }
    for (int cur = t;; cur = bc_parent_[cur]) {
      if (cur < blocks) sel_blocks_.push_back(cur);
      if (cur == s) break;
    }
  }
  if (local_.size() < k.branch.size()) {
    local_.resize(k.branch.size());
    local_stamp_.resize(k.branch.size(), 0);
  }
  ++local_epoch_;
}

int IncrementalOracle::local_id(int branch) {
  if (local_stamp_[branch] != local_epoch_) {
    local_stamp_[branch] = local_epoch_;
    local_[branch] = query_.add_vertex();
  }
  return local_[branch];
}

void IncrementalOracle::build_skeleton(Kernel& k) {
  const int chains = static_cast<int>(k.chain_len.size());
  std::vector<std::pair<std::uint64_t, int>> keyed;
  keyed.reserve(chains);
  for (int c = 0; c < chains; ++c) {
    const int a = std::min(k.chain_a[c], k.chain_b[c]);
    const int b = std::max(k.chain_a[c], k.chain_b[c]);
    if (a == b) continue;
    keyed.emplace_back((static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b), c);
  }
  std::sort(keyed.begin(), keyed.end());
  k.chain_simple.assign(chains, -1);
  k.block_simple.assign(k.block_chains.size(), {});
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i == 0 || keyed[i].first != keyed[i - 1].first) {
      k.block_simple[k.chain_block[keyed[i].second]].push_back(static_cast<int>(k.simple.size()));
      k.simple.emplace_back(static_cast<int>(keyed[i].first >> 32),
                            static_cast<int>(keyed[i].first & 0xffffffffu));
      k.simple_mult.push_back(0);
    }
    ++k.simple_mult.back();
    k.chain_simple[keyed[i].second] = static_cast<int>(k.simple.size()) - 1;
  }
}

bool IncrementalOracle::build_skeleton_query(Kernel& k, Vertex x, Vertex y) {
  const Point px = locate(x);
  const Point py = locate(y);
  query_.reset(0);
  select_blocks(k, px, py);
  const int node_x = px.branch >= 0 ? local_id(px.branch) : query_.add_vertex();
  const int node_y = py.branch >= 0 ? local_id(py.branch) : query_.add_vertex();

  std::array<int, 2> split = {px.chain, py.chain};
  if (split[1] == split[0]) split[1] = -1;
  for (int c : split) {
    if (c != -1 && k.chain_simple[c] >= 0) --k.simple_mult[k.chain_simple[c]];
  }
  const auto restore = [&] {
    for (int c : split) {
      if (c != -1 && k.chain_simple[c] >= 0) ++k.simple_mult[k.chain_simple[c]];
    }
  };

  const int lo = std::min(node_x, node_y);
  const int hi = std::max(node_x, node_y);
  bool adjacent = false;
  for (int blk : sel_blocks_) {
    for (int i : k.block_simple[blk]) {
      if (k.simple_mult[i] == 0) continue;
      const int a = local_id(k.simple[i].first);
      const int b = local_id(k.simple[i].second);
      if (std::min(a, b) == lo && std::max(a, b) == hi) adjacent = true;
      query_.add_edge(a, b);
    }
  }
  // segments of the split chains; a segment joining the same two nodes twice
  // (a closed chain split once) is emitted once
  for (int c : split) {
    if (c == -1) continue;
    std::array<std::pair<int, int>, 4> pts{};
    int count = 0;
    pts[count++] = {0, local_id(k.chain_a[c])};
    if (px.chain == c) pts[count++] = {px.pos, node_x};
    if (py.chain == c) pts[count++] = {py.pos, node_y};
    pts[count++] = {k.chain_len[c], local_id(k.chain_b[c])};
    std::sort(pts.begin(), pts.begin() + count);
    std::array<std::pair<int, int>, 3> seg{};
    int segs = 0;
    for (int i = 0; i + 1 < count; ++i) {
      const int a = std::min(pts[i].second, pts[i + 1].second);
      const int b = std::max(pts[i].second, pts[i + 1].second);
      if (a == b) continue;
      if (std::find(seg.begin(), seg.begin() + segs, std::pair{a, b}) != seg.begin() + segs) continue;
      seg[segs++] = {a, b};
      if (a == lo && b == hi) adjacent = true;
      query_.add_edge(a, b);
    }
  }
  restore();
  if (adjacent) return false;
  query_.add_edge(node_x, node_y);
  query_.finalize();
  return true;
}

bool IncrementalOracle::test_points(Kernel& k, Vertex x, Vertex y, bool subdivide) {
  ++full_tests_;
  if (skeleton_) {
    if (!build_skeleton_query(k, x, y)) return true;
  } else {
    build_query_graph(k, x, y, subdivide);
  }
  return oracle_->accepts_connected(query_);
}

IncrementalOracle::Point IncrementalOracle::locate(Vertex x) const {
  if (branch_index_[x - 1] >= 0) return Point{branch_index_[x - 1], -1, 0};
  return Point{-1, chain_of_[x - 1], chain_pos_[x - 1]};
}

void IncrementalOracle::build_query_graph(const Kernel& k, Vertex x, Vertex y, bool subdivide) {
  query_.reset(0);
  auto emit = [this](int p, int q, int len) {
    if (len == 1) {
      query_.add_edge(p, q);
    } else if (p == q) {  // closed chain, at least three edges
      const int w1 = query_.add_vertex();
      const int w2 = query_.add_vertex();
      query_.add_edge(p, w1);
      query_.add_edge(w1, w2);
      query_.add_edge(w2, p);
    } else {
      const int w = query_.add_vertex();
      query_.add_edge(p, w);
      query_.add_edge(w, q);
    }
  };

  const Point px = locate(x);
  const Point py = locate(y);
  select_blocks(k, px, py);
  const int node_x = px.branch >= 0 ? local_id(px.branch) : query_.add_vertex();
  const int node_y = py.branch >= 0 ? local_id(py.branch) : query_.add_vertex();

  for (int blk : sel_blocks_) {
    for (int c : k.block_chains[blk]) {
      if (c == px.chain || c == py.chain) continue;
      emit(local_id(k.chain_a[c]), local_id(k.chain_b[c]), k.chain_len[c]);
    }
  }
  std::array<int, 2> split = {px.chain, py.chain};
  if (split[1] == split[0]) split[1] = -1;
  for (int c : split) {
    if (c == -1) continue;
    std::array<std::pair<int, int>, 4> pts{};
    int count = 0;
    pts[count++] = {0, local_id(k.chain_a[c])};
    if (px.chain == c) pts[count++] = {px.pos, node_x};
    if (py.chain == c) pts[count++] = {py.pos, node_y};
    pts[count++] = {k.chain_len[c], local_id(k.chain_b[c])};
    std::sort(pts.begin(), pts.begin() + count);
    for (int i = 0; i + 1 < count; ++i) {
      emit(pts[i].second, pts[i + 1].second, pts[i + 1].first - pts[i].first);
    }
  }

  if (subdivide) {
    const int w = query_.add_vertex();
    query_.add_edge(node_x, w);
    query_.add_edge(w, node_y);
  } else {
    query_.add_edge(node_x, node_y);
  }
  query_.finalize();
}

bool IncrementalOracle::needs_full_test(Vertex u, Vertex v) const {
  if (!tracker_.same_component(u, v)) return false;
  if (tracker_.is_tree_component(u)) return false;
  const std::size_t m_after = tracker_.component_edges(u) + 1;
  return m_after >= tracker_.component_vertices(u) + oracle_->excess_threshold();
}

bool IncrementalOracle::full_test(Vertex u, Vertex v) {
  const Vertex root = tracker_.find(u);
  Kernel& k = kernel_for(root, u);
  const Vertex x = attach_[u - 1];
  const Vertex y = attach_[v - 1];
  if (x == y) return true;  // the new block is a cycle hanging off x
  return test_points(k, x, y, u != x || v != y);
}

Decision IncrementalOracle::allows(Vertex u, Vertex v) {
  if (u == v) throw GraphError("allows: self-loop query at vertex " + std::to_string(u));
  if (!graph_.contains(u) || !graph_.contains(v)) throw GraphError("allows: vertex out of range");
  if (graph_.has_edge(u, v)) {
    std::ostringstream os;
    os << "allows: edge (" << u << "," << v << ") already present";
    throw EdgePresentError(os.str());
  }
  if (oracle_->graph_class() == GraphClass::unconstrained) return Decision::accept;
  if (!oracle_->shortcuts_enabled()) return oracle_->allows(graph_, tracker_, u, v);
  if (!needs_full_test(u, v)) return Decision::accept;
  return full_test(u, v) ? Decision::accept : Decision::reject;
}

std::size_t IncrementalOracle::count_forbidden() {
  if (oracle_->graph_class() == GraphClass::unconstrained) return 0;
  const Vertex n = graph_.order();
  std::unordered_map<Vertex, std::vector<Vertex>> members;
  for (Vertex v = 1; v <= n; ++v) {
    if (!tracker_.is_tree_component(v)) members[tracker_.find(v)].push_back(v);
  }
  std::size_t forbidden = 0;
  std::vector<Vertex> roots;
  for (const auto& [root, list] : members) roots.push_back(root);
  std::sort(roots.begin(), roots.end());
  for (Vertex root : roots) {
    const auto& comp = members[root];
    const std::size_t m_after = tracker_.component_edges(root) + 1;
    if (m_after < comp.size() + oracle_->excess_threshold()) continue;
    std::unordered_map<std::uint64_t, bool> memo;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (std::size_t j = i + 1; j < comp.size(); ++j) {
        const Vertex u = comp[i];
        const Vertex v = comp[j];
        if (graph_.has_edge(u, v)) continue;
        if (!oracle_->shortcuts_enabled()) {
          if (oracle_->allows(graph_, tracker_, u, v) == Decision::reject) ++forbidden;
          continue;
        }
        Kernel& k = kernel_for(root, u);
        const Vertex ax = attach_[u - 1];
        const Vertex ay = attach_[v - 1];
        if (ax == ay) continue;
        const bool sub = u != ax || v != ay;
        const std::uint64_t key = (static_cast<std::uint64_t>(std::min(ax, ay)) << 33) |
                                  (static_cast<std::uint64_t>(std::max(ax, ay)) << 1) |
                                  (sub ? 1u : 0u);
        auto it = memo.find(key);
        if (it == memo.end()) it = memo.emplace(key, test_points(k, ax, ay, sub)).first;
        if (!it->second) ++forbidden;
      }
    }
  }
  return forbidden;
}

}  // namespace crgp
