#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "crgp/constraints.hpp"
#include "crgp/graph.hpp"

namespace crgp {

class MinorSizeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr Vertex kMaxMinorHost = 10;

/// Brute-force minor containment for small hosts (at most 10 vertices).
/// Contracts edges and deletes vertices down to v(H) vertices, then looks for
/// H as a spanning subgraph. Results are memoized on a degree-sorted adjacency
/// signature, so one tester can be reused across many hosts.
class MinorTester {
 public:
  explicit MinorTester(const Graph& pattern);

  /// Throws MinorSizeError if the host has more than 10 vertices.
  bool is_minor_of(const Graph& host);

 private:
  struct Small {
    int n = 0;
    std::array<std::uint16_t, kMaxMinorHost> adj{};
    int edges() const;
  };

  bool search(const Small& g);
  bool spanning_subgraph(const Small& g) const;
  static Small remove_vertex(const Small& g, int x);
  static Small contract(const Small& g, int a, int b);
  static std::uint64_t signature(const Small& g);

  Small pattern_;
  int pattern_edges_ = 0;
  std::vector<int> pattern_order_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

bool has_minor(const Graph& host, const Graph& pattern);

/// Membership by excluding every forbidden minor of the class; small graphs only.
class MinorMembership {
 public:
  explicit MinorMembership(GraphClass cls);
  bool is_member(const Graph& g);

 private:
  std::vector<MinorTester> testers_;
};

}  // namespace crgp
