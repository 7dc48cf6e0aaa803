#pragma once

#include <cstdint>

namespace np4g {

namespace detail {
inline uint64_t avalanche64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}
} // namespace detail

/// Derives an independent stream seed from a parent seed and an index.
/// Search code keys every attempt, phase, and trial off such substreams,
/// so parallel and serial schedules draw identical candidates.
inline uint64_t derive_seed(uint64_t parent, uint64_t index) {
  return detail::avalanche64(parent + 0x9E3779B97F4A7C15ULL * (index + 1));
}

/// SplitMix64: tiny, seedable, and splittable via derive_seed.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return detail::avalanche64(state_);
  }

  /// Uniform in [0, bound) without modulo bias (Lemire's method).
  uint64_t next_below(uint64_t bound) {
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    uint64_t lo = static_cast<uint64_t>(m);
    if (lo < bound) {
      uint64_t threshold = -bound % bound;
      while (lo < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

private:
  uint64_t state_;
};

} // namespace np4g
