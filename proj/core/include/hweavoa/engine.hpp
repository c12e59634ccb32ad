#pragma once

// The composed optimization loop. Three switches select among the eight
// ablation variants, from plain AVOA (all off) to HWEAVOA (all on).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hweavoa/kernel.hpp"
#include "hweavoa/random.hpp"
#include "hweavoa/strategies.hpp"
#include "hweavoa/types.hpp"

namespace hweavoa {

struct VariantConfig {
  bool use_henon_elite = false;  // H
  bool use_weight = false;       // W
  bool use_rlc = false;          // E
  kernel::AvoaParams avoa;
  strategies::HenonParams henon;
  strategies::WeightParams weight;
  int pop_size = 30;
  int max_iters = 500;
  std::uint64_t seed = 0;

  /// Looks up one of variant_names(), case-insensitively. Throws
  /// std::invalid_argument for unknown names.
  static VariantConfig named(std::string_view name);

  /// Lower-case variant name derived from the three switches, e.g. "heavoa".
  std::string name() const;

  void validate() const;
};

/// avoa, havoa, wavoa, eavoa, hwavoa, heavoa, weavoa, hweavoa.
const std::array<std::string_view, 8>& variant_names();

/// Problem wrapper that counts objective evaluations.
class CountedProblem {
 public:
  explicit CountedProblem(const Problem& problem) : problem_(problem) {}

  double evaluate(std::span<const double> x) {
    ++evaluations_;
    return problem_(x);
  }
  const SearchSpace& space() const { return problem_.space(); }
  const Problem& problem() const { return problem_; }
  std::int64_t evaluations() const { return evaluations_; }

 private:
  const Problem& problem_;
  std::int64_t evaluations_ = 0;
};

struct RunRecord {
  std::uint64_t seed = 0;
  /// best1 fitness after each iteration; non-increasing.
  std::vector<double> best_fitness_per_iteration;
  /// Cumulative evaluation count after each iteration (initialization included).
  std::vector<std::int64_t> evaluations_per_iteration;
  Vulture final_best;
  std::int64_t evaluations_used = 0;
  double wall_time_seconds = 0.0;
  std::vector<std::string> warnings;
};

/// Uniform population of pop_size, or with HCE the elite N of N uniform plus
/// N Henon-chaotic members. Leaders are set on return.
Population initialize(const VariantConfig& cfg, CountedProblem& problem, RandomSource& rng,
                      std::vector<std::string>* warnings = nullptr);

/// One synchronous iteration: every member moves against the leaders held at
/// the start of the iteration, then the leaders are refreshed from the union of
/// the old leaders and the moved flock.
Population step(Population pop, int t, const VariantConfig& cfg, CountedProblem& problem,
                RandomSource& rng);

/// Keeps the two best of {old best1, old best2, members}; old leaders win ties.
Population retain_leaders(Population pop);

RunRecord run(const VariantConfig& cfg, const Problem& problem);

}  // namespace hweavoa
