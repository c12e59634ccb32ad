#include "hweavoa/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hweavoa {

double RandomSource::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("uniform: lo > hi");
  const double u = uniform01();
  if (lo == hi) return lo;
  const double v = lo + (hi - lo) * u;
  // lo + (hi - lo) * u can round up to hi
  return v < hi ? v : std::nextafter(hi, lo);
}

double RandomSource::normal(double mean, double stddev) {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  return mean + stddev * radius * std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace hweavoa
