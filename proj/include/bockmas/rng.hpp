#pragma once

#include <cstdint>

namespace bockmas {

// Deterministic 64-bit stream (splitmix64).  Fixed algorithm so seeded runs
// reproduce byte-identically across platforms; no std::mt19937 anywhere.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound), bound > 0.  Rejection keeps it exact.
  uint64_t below(uint64_t bound) {
    for (;;) {
      uint64_t x = next();
      uint64_t r = x % bound;
      if (x - r <= ~uint64_t{0} - (bound - 1)) return r;
    }
  }
};

}  // namespace bockmas
