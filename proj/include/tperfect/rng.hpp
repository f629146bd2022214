#ifndef TPERFECT_RNG_HPP
#define TPERFECT_RNG_HPP

#include <cstdint>

namespace tperfect {

/// xorshift64* seeded through one splitmix64 step, so every 64-bit seed
/// (including 0) yields a non-zero state. The exact recurrences are part of
/// the corpus format: identical seeds give identical corpora everywhere.
///
///   seed:  z = seed + 0x9E3779B97F4A7C15
///          z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///          z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///          state = z ^ (z >> 31), replaced by 0x9E3779B97F4A7C15 if zero
///   next:  x ^= x >> 12; x ^= x << 25; x ^= x >> 27;
///          return x * 0x2545F4914F6CDD1D
///   below(b): rejection sampling on next() against the largest multiple
///          of b, then next() % b
class Rng {
public:
  explicit Rng(std::uint64_t seed) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    state_ = z ^ (z >> 31);
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  long between(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

private:
  std::uint64_t state_;
};

}  // namespace tperfect

#endif  // TPERFECT_RNG_HPP
