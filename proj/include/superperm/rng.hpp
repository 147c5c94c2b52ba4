#pragma once

#include <cstdint>
#include <random>

namespace superperm {

// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// mt19937_64 with hand-rolled bounded draws, so a seed yields the same
// sequence on every platform (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Stream for one restart: depends only on (seed, index).
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix64(seed ^ mix64(index)));
  }

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = 0;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace superperm
