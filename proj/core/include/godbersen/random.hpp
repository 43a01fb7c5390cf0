#pragma once

#include <cstdint>
#include <random>

#include "godbersen/rational.hpp"

namespace godbersen {

/// Seeded integer stream with a platform-independent mapping to ranges
/// (std::uniform_int_distribution is implementation-defined, which would
/// break byte-identical sweep output across standard libraries).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  /// p/q with q in [1, den_bound] and |p/q| <= magnitude.
  Rat rational(long magnitude, long den_bound) {
    const long q = uniform(1, den_bound);
    const long p = uniform(-magnitude * q, magnitude * q);
    return {p, q};
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace godbersen
