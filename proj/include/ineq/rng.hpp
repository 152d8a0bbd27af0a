#pragma once

#include <cstdint>

namespace ineq {

// Deterministic 64-bit generator (splitmix64). Used everywhere a seed is
// taken so that results are reproducible across standard libraries, which
// std::uniform_real_distribution does not guarantee.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * u01(); }

  // Inclusive integer range; modulo bias is irrelevant for the small ranges
  // used here.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Stable per-index child seed for independent parallel streams.
  static std::uint64_t child_seed(std::uint64_t seed, std::uint64_t index) {
    Rng r(seed ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return r.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace ineq
