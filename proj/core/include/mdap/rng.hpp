#pragma once

#include <cstdint>
#include <limits>

namespace mdap {

// SplitMix64: 64-bit state advanced by the golden gamma, output mixed by two
// xor-shift-multiply rounds. Small and reproducible across platforms, which
// is what instance seeding needs.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  constexpr std::uint64_t next() noexcept {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  constexpr std::uint64_t operator()() noexcept { return next(); }
  static constexpr std::uint64_t min() noexcept { return 0; }
  static constexpr std::uint64_t max() noexcept { return std::numeric_limits<std::uint64_t>::max(); }

  // Uniform integer in [lo, hi]. Draws falling in the incomplete top bucket
  // are rejected so every value is equally likely.
  constexpr std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) noexcept {
    const std::uint64_t span = hi - lo + 1;
    if (span == 0) return next();  // full 64-bit range
    const std::uint64_t limit = max() - (max() % span + 1) % span;
    std::uint64_t x = next();
    while (x > limit) x = next();
    return lo + x % span;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mdap
