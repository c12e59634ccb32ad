#pragma once

// The three HWEAVOA improvements over plain AVOA:
//   HCE  Henon-chaotic initialization merged with a uniform population (elite pick)
//   NWF  nonlinear adaptive inertia weight applied to candidate positions
//   RLC  reverse-learning candidate competing with each moved vulture

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "hweavoa/random.hpp"
#include "hweavoa/types.hpp"

namespace hweavoa::strategies {

struct HenonParams {
  double a = 1.4;
  double b = 0.3;
  double x0 = 0.0;
  double y0 = 0.0;
  int burn_in = 100;
};

/// |x| beyond this restarts the orbit from fresh small seeds.
inline constexpr double kHenonDivergence = 1e5;

/// Iterates x' = 1 + y - a x^2, y' = b x from (x0, y0). The first burn_in
/// iterates are discarded and the next n returned.
std::vector<std::pair<double, double>> henon_sequence(std::size_t n, const HenonParams& params);

struct HenonInit {
  std::vector<Vector> positions;
  /// Set when the chaotic batch was degenerate (all values equal) and uniform
  /// random positions were used instead.
  bool fell_back_to_uniform = false;
};

/// N positions built from N*dim consecutive x-values of the Henon orbit. The
/// orbit seeds x0, y0 are drawn from U(0, 0.1) (overriding params.x0/y0), the
/// batch is min-max normalized to [0, 1] and mapped row-major onto the axis
/// bounds.
HenonInit henon_init(std::size_t n, const SearchSpace& space, RandomSource& rng,
                     const HenonParams& params);

/// Fitness-sorted union of both lists (stable, chaotic first); first N kept.
std::vector<Vulture> elite_merge(std::span<const Vulture> chaotic,
                                 std::span<const Vulture> conventional);

struct WeightParams {
  double alpha = 0.8;
  double beta = 0.2;
  int period = 6;
  int threshold = 3;
};

/// (alpha + beta draw) sin^5(pi/10 t/T) when t mod period >= threshold, else 1.
double inertia_weight(int t, int max_iters, const WeightParams& params, double draw);

/// draw (ub + lb) - p, clamped to the search space.
Vector reverse_candidate(std::span<const double> p, const SearchSpace& space, double draw);

/// The fitter of the two; ties keep the incumbent p.
const Vulture& rlc_select(const Vulture& p, const Vulture& e);

}  // namespace hweavoa::strategies
