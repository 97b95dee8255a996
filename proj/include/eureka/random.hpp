#pragma once

#include <cstdint>
#include <random>

namespace eureka {

// Seeded source for drum kicks. Bounded draws use rejection sampling over
// the raw 64-bit engine output, so a seed gives the same stream on every
// standard library (std::uniform_int_distribution does not guarantee that).
class KickGenerator {
 public:
  explicit KickGenerator(std::uint64_t seed = 0) : engine_(seed) {}

  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % n;
    }
  }

  // Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  friend bool operator==(const KickGenerator&, const KickGenerator&) = default;

 private:
  std::mt19937_64 engine_;
};

}  // namespace eureka
