#pragma once

#include <cstdint>

namespace ordforge {

// Deterministic across platforms, unlike std:: distributions. All seeded
// suites in the CLI and tests go through this.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n); n = 0 yields 0.
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    return next() % n;
  }

  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

  SplitMix64 fork() { return SplitMix64(next()); }
};

}  // namespace ordforge
