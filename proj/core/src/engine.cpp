#include "hweavoa/engine.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace hweavoa {
namespace {

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

Vulture evaluated(Vector position, CountedProblem& problem) {
  const double f = problem.evaluate(position);
  return {std::move(position), f};
}

Vector uniform_position(const SearchSpace& space, RandomSource& rng) {
  Vector x(space.dim());
  for (std::size_t j = 0; j < x.size(); ++j) x[j] = rng.uniform(space.lower(j), space.upper(j));
  return x;
}

// Picks the phase from |F| and applies the matching rule. Consumes only the
// draws the selected branch needs.
Vector move(const Population& pop, std::span<const double> p, std::span<const double> leader,
            double rate, const VariantConfig& cfg, const SearchSpace& space, RandomSource& rng) {
  const double choose = rng.uniform01();
  const double magnitude = std::abs(rate);
  if (magnitude >= 1.0) {
    kernel::ExploreDraws d;
    if (choose < cfg.avoa.p1) {
      d.rand_x = rng.uniform01();
    } else {
      d.rand2 = rng.uniform01();
      d.rand3 = rng.uniform01();
    }
    return kernel::explore_step(p, leader, rate, space, choose, cfg.avoa.p1, d);
  }
  if (magnitude >= 0.5) {
    kernel::ConflictDraws d;
    if (choose < cfg.avoa.p2) {
      d.rand_x = rng.uniform01();
      d.rand4 = rng.uniform01();
    } else {
      d.rand5 = rng.uniform01();
      d.rand6 = rng.uniform01();
    }
    return kernel::exploit_stage1_step(p, leader, rate, choose, cfg.avoa.p2, d);
  }
  Vector levy;
  if (!(choose < cfg.avoa.p3)) levy = kernel::levy_flight(p.size(), rng);
  return kernel::exploit_stage2_step(p, pop, leader, rate, choose, cfg.avoa.p3, levy);
}

}  // namespace

const std::array<std::string_view, 8>& variant_names() {
  static constexpr std::array<std::string_view, 8> names = {
      "avoa", "havoa", "wavoa", "eavoa", "hwavoa", "heavoa", "weavoa", "hweavoa"};
  return names;
}

VariantConfig VariantConfig::named(std::string_view name) {
  const std::string key = lowercase(name);
  for (const auto candidate : variant_names()) {
    if (candidate != key) continue;
    const std::string_view prefix = candidate.substr(0, candidate.size() - 4);
    VariantConfig cfg;
    cfg.use_henon_elite = prefix.find('h') != std::string_view::npos;
    cfg.use_weight = prefix.find('w') != std::string_view::npos;
    cfg.use_rlc = prefix.find('e') != std::string_view::npos;
    return cfg;
  }
  throw std::invalid_argument("unknown variant '" + std::string(name) + "'");
}

std::string VariantConfig::name() const {
  std::string out;
  if (use_henon_elite) out += 'h';
  if (use_weight) out += 'w';
  if (use_rlc) out += 'e';
  return out + "avoa";
}

void VariantConfig::validate() const {
  if (pop_size < 2) throw PopulationTooSmall("VariantConfig: pop_size must be >= 2");
  if (max_iters < 1) throw std::invalid_argument("VariantConfig: max_iters must be >= 1");
  avoa.validate();
  if (henon.burn_in < 0) throw std::invalid_argument("VariantConfig: henon.burn_in must be >= 0");
  if (weight.period < 1 || weight.threshold < 0)
    throw std::invalid_argument("VariantConfig: weight period must be >= 1, threshold >= 0");
}

Population retain_leaders(Population pop) {
  if (pop.members.size() < 2)
    throw PopulationTooSmall("retain_leaders: need at least 2 members");
  const Vulture* first = &pop.best1;
  const Vulture* second = &pop.best2;
  if (second->fitness < first->fitness) std::swap(first, second);
  for (const auto& m : pop.members) {
    if (m.fitness < first->fitness) {
      second = first;
      first = &m;
    } else if (m.fitness < second->fitness) {
      second = &m;
    }
  }
  Vulture best1 = *first;
  Vulture best2 = *second;
  pop.best1 = std::move(best1);
  pop.best2 = std::move(best2);
  return pop;
}

Population initialize(const VariantConfig& cfg, CountedProblem& problem, RandomSource& rng,
                      std::vector<std::string>* warnings) {
  cfg.validate();
  const auto n = static_cast<std::size_t>(cfg.pop_size);
  const SearchSpace& space = problem.space();

  Population pop;
  pop.members.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    pop.members.push_back(evaluated(uniform_position(space, rng), problem));

  if (cfg.use_henon_elite) {
    auto chaos = strategies::henon_init(n, space, rng, cfg.henon);
    if (chaos.fell_back_to_uniform && warnings)
      warnings->push_back("henon_init: degenerate chaotic batch, fell back to uniform init");
    std::vector<Vulture> chaotic;
    chaotic.reserve(n);
    for (auto& pos : chaos.positions) chaotic.push_back(evaluated(std::move(pos), problem));
    pop.members = strategies::elite_merge(chaotic, pop.members);
  }
  return update_leaders(std::move(pop));
}

Population step(Population pop, int t, const VariantConfig& cfg, CountedProblem& problem,
                RandomSource& rng) {
  if (t < 1 || t > cfg.max_iters)
    throw std::invalid_argument("step: iteration " + std::to_string(t) + " outside [1, " +
                                std::to_string(cfg.max_iters) + "]");
  const SearchSpace& space = problem.space();

  for (auto& member : pop.members) {
    // pop.best1/best2 are not touched inside this loop, so the span stays valid
    // and every member sees the same leaders.
    const auto leader =
        kernel::select_leader(pop, cfg.avoa.alpha, cfg.avoa.beta, rng.uniform01());
    const double h = rng.uniform(-2.0, 2.0);
    const double z = rng.uniform(-1.0, 1.0);
    const double rand1 = rng.uniform01();
    const auto hunger = kernel::hunger_rate(t, cfg.max_iters, cfg.avoa.w, h, z, rand1);
    const double omega =
        cfg.use_weight ? strategies::inertia_weight(t, cfg.max_iters, cfg.weight, rng.uniform01())
                       : 1.0;

    Vector candidate = move(pop, member.position, leader, hunger.rate, cfg, space, rng);
    for (auto& c : candidate) c *= omega;
    Vulture moved = evaluated(clamp(candidate, space), problem);

    if (cfg.use_rlc) {
      Vulture reverse =
          evaluated(strategies::reverse_candidate(moved.position, space, rng.uniform01()), problem);
      member = strategies::rlc_select(moved, reverse);
    } else {
      member = std::move(moved);
    }
  }
  return retain_leaders(std::move(pop));
}

RunRecord run(const VariantConfig& cfg, const Problem& problem) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();

  RunRecord record;
  record.seed = cfg.seed;
  record.best_fitness_per_iteration.reserve(static_cast<std::size_t>(cfg.max_iters));
  record.evaluations_per_iteration.reserve(static_cast<std::size_t>(cfg.max_iters));

  RandomSource rng(cfg.seed);
  CountedProblem counted(problem);
  Population pop = initialize(cfg, counted, rng, &record.warnings);
  for (int t = 1; t <= cfg.max_iters; ++t) {
    pop = step(std::move(pop), t, cfg, counted, rng);
    record.best_fitness_per_iteration.push_back(pop.best1.fitness);
    record.evaluations_per_iteration.push_back(counted.evaluations());
  }
  record.final_best = pop.best1;
  record.evaluations_used = counted.evaluations();
  record.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

}  // namespace hweavoa
