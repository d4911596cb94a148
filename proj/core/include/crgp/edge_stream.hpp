#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "crgp/graph.hpp"

namespace crgp {

/// One step of the splitmix64 sequence; advances `state`.
std::uint64_t splitmix64(std::uint64_t& state);

/// Seed for replicate `index` of a sweep rooted at `master`. Independent of
/// scheduling, so parallel sweeps are reproducible.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t index);

/// xoshiro256** seeded through splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  /// Uniform integer in [0, bound), bound > 0 (Lemire's multiply-shift with rejection).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform double in [0, 1).
  double uniform();

 private:
  std::uint64_t s_[4];
};

/// Number of unordered pairs of an n-vertex set.
inline std::uint64_t pair_count(Vertex n) {
  return static_cast<std::uint64_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
}

enum class StreamMode { lazy, full };

/// Uniformly random ordering of the pairs of [n], produced one pair at a time.
///
/// Lazy mode draws uniform pairs and skips repeats using a hash set; it never
/// touches the full pair list. Once half the pairs have been emitted it
/// switches to full mode: the unseen pairs are materialized and the rest of
/// the ordering continues as an incremental Fisher-Yates shuffle. Full mode
/// from the start materializes all N pairs.
class EdgeStream {
 public:
  /// Largest N for which the pair list may be materialized.
  static constexpr std::uint64_t kMaxMaterialized = std::uint64_t{1} << 25;

  EdgeStream(Vertex n, std::uint64_t seed, StreamMode mode);

  std::optional<Edge> next();

  Vertex order() const { return n_; }
  std::uint64_t total() const { return total_; }
  std::uint64_t emitted() const { return emitted_; }
  StreamMode mode() const { return mode_; }

 private:
  std::uint64_t key(Edge e) const { return static_cast<std::uint64_t>(e.u) * (n_ + 1ull) + e.v; }
  void materialize();

  Vertex n_;
  std::uint64_t total_;
  std::uint64_t emitted_ = 0;
  StreamMode mode_;
  Rng rng_;
  std::unordered_set<std::uint64_t> seen_;
  std::vector<Edge> pool_;  // full mode: pool_[cursor_..] are the pairs not yet emitted
  std::uint64_t cursor_ = 0;
};

}  // namespace crgp
