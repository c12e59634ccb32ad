#pragma once

#include <cstdint>
#include <random>

namespace hweavoa {

/// Seeded source of uniform and normal draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The conversions to real numbers are done here rather than through
/// the std distributions, which are implementation-defined, so a given seed
/// yields the same draws on every platform.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform on [0, 1) with 53 random bits. Advances the engine once.
  double uniform01();

  /// Uniform on [lo, hi); returns lo when lo == hi. Advances the engine once.
  double uniform(double lo, double hi);

  /// Box-Muller normal. Consumes exactly two uniform draws.
  double normal(double mean = 0.0, double stddev = 1.0);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace hweavoa
