#pragma once

#include <cstdint>
#include <random>

namespace subcodes {

/// Seeded generator with a fixed, platform-independent draw procedure.
/// std::uniform_int_distribution is avoided because its output is
/// implementation defined.
class Rng {
 public:
  static constexpr const char* algorithm = "mt19937_64+rejection v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= threshold) return x % n;
    }
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace subcodes
