#pragma once

#include <cstdint>
#include <random>

namespace grover {

/// Seeded generator with a fixed output mapping, so validation reports and
/// tests reproduce bit-for-bit across platforms (std::uniform_real_distribution
/// is not pinned by the standard; this mapping is).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform in [0, 1): top 53 bits of the engine output.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform integer in [lo, hi] (modulo bias is irrelevant at test scales).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace grover
