#include "crgp/edge_stream.hpp"

#include <stdexcept>
#include <utility>

namespace crgp {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master;
  const std::uint64_t a = splitmix64(s);
  std::uint64_t t = a ^ (index * 0xd1342543de82ef95ull + 0x2545f4914f6cdd1dull);
  return splitmix64(t);
}

namespace {
__extension__ using u128 = unsigned __int128;

inline std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::uint64_t s = seed;
  for (auto& w : s_) w = splitmix64(s);
}

std::uint64_t Rng::next() {
  const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = rotl(s_[3], 45);
  return result;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  u128 m = static_cast<u128>(next()) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      m = static_cast<u128>(next()) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

double Rng::uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

EdgeStream::EdgeStream(Vertex n, std::uint64_t seed, StreamMode mode)
    : n_(n), total_(pair_count(n)), mode_(mode), rng_(seed) {
  if (mode_ == StreamMode::full) materialize();
}

void EdgeStream::materialize() {
  if (total_ > kMaxMaterialized) {
    throw std::length_error("EdgeStream: too many pairs to materialize");
  }
  pool_.clear();
  pool_.reserve(total_ - emitted_);
  for (Vertex u = 1; u <= n_; ++u) {
    for (Vertex v = u + 1; v <= n_; ++v) {
      const Edge e{u, v};
      if (!seen_.contains(key(e))) pool_.push_back(e);
    }
  }
  seen_ = {};
  cursor_ = 0;
  mode_ = StreamMode::full;
}

std::optional<Edge> EdgeStream::next() {
  if (emitted_ >= total_) return std::nullopt;
  if (mode_ == StreamMode::lazy && 2 * emitted_ >= total_ && total_ <= kMaxMaterialized) {
    materialize();
  }
  if (mode_ == StreamMode::full) {
    const std::uint64_t left = pool_.size() - cursor_;
    const std::uint64_t j = cursor_ + rng_.below(left);
    std::swap(pool_[cursor_], pool_[j]);
    ++emitted_;
    return pool_[cursor_++];
  }
  for (;;) {
    const auto u = static_cast<Vertex>(1 + rng_.below(n_));
    const auto v = static_cast<Vertex>(1 + rng_.below(n_));
    if (u == v) continue;
    const Edge e = make_edge(u, v);
    if (seen_.insert(key(e)).second) {
      ++emitted_;
      return e;
    }
  }
}

}  // namespace crgp
