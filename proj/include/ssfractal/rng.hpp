#pragma once

#include <cstdint>

namespace ssf {

// SplitMix64: tiny, fast, and fully reproducible across platforms.  Every
// randomized generator in the library derives its stream from this so that a
// (parameters, seed) pair always produces byte-identical results.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform draw from [lo, hi], unbiased via rejection sampling.
  uint64_t uniform(uint64_t lo, uint64_t hi) {
    uint64_t n = hi - lo + 1;
    if (n == 0) return next();  // full 64-bit range
    uint64_t threshold = (0 - n) % n;
    for (;;) {
      uint64_t r = next();
      if (r >= threshold) return lo + r % n;
    }
  }

 private:
  uint64_t state_;
};

}  // namespace ssf
