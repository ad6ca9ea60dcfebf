#pragma once
// Deterministic pseudo-random helpers. Standard-library distributions are
// not byte-stable across implementations, so the generators used for test
// instances and benchmarks are pinned down here.

#include <cstdint>

namespace updag {

// splitmix64, the reference stream of Steele, Lea and Flood. Full 64-bit
// period, stateless apart from the counter, identical output everywhere.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n) via 128-bit multiply; n = 0 is a caller bug.
  std::uint64_t below(std::uint64_t n) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next()) * n) >> 64);
  }

  // Uniform value in [lo, hi], inclusive.
  std::int64_t between(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  bool coin() { return (next() & 1ull) != 0; }

 private:
  std::uint64_t state_;
};

}  // namespace updag
