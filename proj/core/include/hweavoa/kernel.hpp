#pragma once

// Per-individual update rules of the African Vultures Optimization Algorithm.
//
// Every step function takes its random numbers as explicit arguments and is
// pure; the engine owns the RandomSource and the draw order. Candidates are
// returned unclamped.

#include <cstddef>
#include <span>

#include "hweavoa/random.hpp"
#include "hweavoa/types.hpp"

namespace hweavoa::kernel {

struct AvoaParams {
  double p1 = 0.6;     // exploration: leader-guided vs random relocation
  double p2 = 0.4;     // stage-1 exploitation: conflict vs rotational flight
  double p3 = 0.6;     // stage-2 exploitation: accumulation vs Levy competition
  double w = 2.5;      // hunger exponent
  double alpha = 0.8;  // probability of following best1
  double beta = 0.2;   // probability of following best2

  /// Throws std::invalid_argument if a probability is outside [0, 1], w <= 0,
  /// or alpha + beta differs from 1 by more than 1e-12.
  void validate() const;
};

struct HungerState {
  double rate;          // F
  double perturbation;  // M = h * (sin^w(pi/2 t/T) + cos(pi/2 t/T) - 1)
};

/// F = (2 rand1 + 1) z (1 - t/T) + M. Throws for t > T, t < 0 or T < 1.
HungerState hunger_rate(int t, int max_iters, double w, double h, double z, double rand1);

/// Roulette over the two leaders: best1 when draw < alpha, otherwise best2.
std::span<const double> select_leader(const Population& pop, double alpha, double beta,
                                      double draw);

struct ExploreDraws {
  double rand_x = 0.0;
  double rand2 = 0.0;
  double rand3 = 0.0;
};

/// |F| >= 1. choose < p1: R - |X R - p| F with X = 2 rand_x.
/// Otherwise: R - F + rand2 ((ub - lb) rand3 + lb).
Vector explore_step(std::span<const double> p, std::span<const double> leader, double rate,
                    const SearchSpace& space, double choose, double p1,
                    const ExploreDraws& draws);

struct ConflictDraws {
  double rand_x = 0.0;
  double rand4 = 0.0;
  double rand5 = 0.0;
  double rand6 = 0.0;
};

/// 0.5 <= |F| < 1. choose < p2: conflict |X R - p| (F + rand4) - (R - p).
/// Otherwise rotational flight R - (S1 + S2) with component-wise trig.
Vector exploit_stage1_step(std::span<const double> p, std::span<const double> leader,
                           double rate, double choose, double p2, const ConflictDraws& draws);

/// Denominators of the accumulation rule smaller than this in magnitude are
/// replaced by +/- this value (sign of zero taken as +).
inline constexpr double kDenominatorGuard = 1e-12;

/// |F| < 0.5. choose < p3: mean of A1, A2 built from both leaders.
/// Otherwise R - |R - p| F levy.
Vector exploit_stage2_step(std::span<const double> p, const Population& leaders,
                           std::span<const double> leader, double rate, double choose,
                           double p3, std::span<const double> levy);

/// Mantegna stability index and step scale used by levy_flight.
inline constexpr double kLevyIndex = 1.5;
inline constexpr double kLevyScale = 0.01;

/// sigma_u of Mantegna's method for stability index `index`.
double mantegna_sigma(double index);

/// dim i.i.d. Levy steps 0.01 u / |v|^(1/1.5), u ~ N(0, sigma^2), v ~ N(0, 1).
/// Draw order per component: u, then v.
Vector levy_flight(std::size_t dim, RandomSource& rng);

}  // namespace hweavoa::kernel
