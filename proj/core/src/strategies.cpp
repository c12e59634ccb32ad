#include "hweavoa/strategies.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hweavoa::strategies {

std::vector<std::pair<double, double>> henon_sequence(std::size_t n,
                                                      const HenonParams& params) {
  if (n < 1) throw std::invalid_argument("henon_sequence: n must be >= 1");
  if (params.burn_in < 0) throw std::invalid_argument("henon_sequence: burn_in must be >= 0");

  std::vector<std::pair<double, double>> out;
  out.reserve(n);
  double x = params.x0;
  double y = params.y0;
  std::uint64_t restarts = 0;
  const auto burn_in = static_cast<std::size_t>(params.burn_in);

  for (std::size_t k = 0; out.size() < n;) {
    const double next_x = 1.0 + y - params.a * x * x;
    const double next_y = params.b * x;
    if (!(std::abs(next_x) <= kHenonDivergence)) {
      // Restart the whole orbit (burn-in included) from fresh seeds.
      RandomSource reseed(0x9e3779b97f4a7c15ULL ^ ++restarts ^
                          std::bit_cast<std::uint64_t>(params.a));
      x = reseed.uniform(0.0, 0.1);
      y = reseed.uniform(0.0, 0.1);
      out.clear();
      k = 0;
      if (restarts > 1000)
        throw std::runtime_error("henon_sequence: orbit diverges for a=" +
                                 std::to_string(params.a) + ", b=" + std::to_string(params.b));
      continue;
    }
    x = next_x;
    y = next_y;
    if (k >= burn_in) out.emplace_back(x, y);
    ++k;
  }
  return out;
}

HenonInit henon_init(std::size_t n, const SearchSpace& space, RandomSource& rng,
                     const HenonParams& params) {
  if (n < 2) throw PopulationTooSmall("henon_init: need at least 2 members");
  const std::size_t dim = space.dim();

  HenonParams seeded = params;
  seeded.x0 = rng.uniform(0.0, 0.1);
  seeded.y0 = rng.uniform(0.0, 0.1);
  const auto orbit = henon_sequence(n * dim, seeded);

  const auto [lo_it, hi_it] = std::minmax_element(
      orbit.begin(), orbit.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  const double lo = lo_it->first;
  const double hi = hi_it->first;

  HenonInit init;
  init.positions.assign(n, Vector(dim));
  if (!(hi > lo)) {
    init.fell_back_to_uniform = true;
    for (auto& pos : init.positions)
      for (std::size_t j = 0; j < dim; ++j) pos[j] = rng.uniform(space.lower(j), space.upper(j));
    return init;
  }
  const double span = hi - lo;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      const double unit = (orbit[i * dim + j].first - lo) / span;
      const double v = space.lower(j) + unit * (space.upper(j) - space.lower(j));
      init.positions[i][j] = std::min(space.upper(j), std::max(space.lower(j), v));
    }
  }
  return init;
}

std::vector<Vulture> elite_merge(std::span<const Vulture> chaotic,
                                 std::span<const Vulture> conventional) {
  if (chaotic.size() != conventional.size())
    throw std::invalid_argument("elite_merge: populations differ in size (" +
                                std::to_string(chaotic.size()) + " vs " +
                                std::to_string(conventional.size()) + ")");
  std::vector<Vulture> pool(chaotic.begin(), chaotic.end());
  pool.insert(pool.end(), conventional.begin(), conventional.end());
  std::stable_sort(pool.begin(), pool.end(),
                   [](const Vulture& a, const Vulture& b) { return a.fitness < b.fitness; });
  pool.resize(chaotic.size());
  return pool;
}

double inertia_weight(int t, int max_iters, const WeightParams& params, double draw) {
  if (max_iters < 1 || t < 1 || t > max_iters)
    throw std::invalid_argument("inertia_weight: iteration " + std::to_string(t) +
                                " outside [1, " + std::to_string(max_iters) + "]");
  if (params.period < 1) throw std::invalid_argument("inertia_weight: period must be >= 1");
  if (t % params.period < params.threshold) return 1.0;
  const double s = std::sin(std::numbers::pi / 10.0 * static_cast<double>(t) / max_iters);
  return (params.alpha + params.beta * draw) * std::pow(s, 5);
}

Vector reverse_candidate(std::span<const double> p, const SearchSpace& space, double draw) {
  if (p.size() != space.dim())
    throw std::length_error("reverse_candidate: position length does not match search space");
  Vector e(p.size());
  for (std::size_t j = 0; j < p.size(); ++j)
    e[j] = draw * (space.upper(j) + space.lower(j)) - p[j];
  return clamp(e, space);
}

const Vulture& rlc_select(const Vulture& p, const Vulture& e) {
  return e.fitness < p.fitness ? e : p;
}

}  // namespace hweavoa::strategies
