#pragma once

#include <cstdint>

namespace sdbb {

// Counter-based splittable generator: every (seed, counter) pair yields an
// independent stream, so parallel consumers stay reproducible regardless of
// thread count.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }
};

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (counter + 1)));
  return g.next();
}

// 64-bit FNV-1a, used to derive per-candidate seeds from string keys.
inline std::uint64_t fnv1a(const char* data, std::size_t len) {
  std::uint64_t h = 1469598103934665603ULL;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= std::uint8_t(data[i]);
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace sdbb
