#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hweavoa/benchmarks.hpp"
#include "hweavoa/engine.hpp"

namespace hweavoa {
namespace {

VariantConfig small(std::string_view name, int pop = 30, int iters = 50, std::uint64_t seed = 1) {
  auto cfg = VariantConfig::named(name);
  cfg.pop_size = pop;
  cfg.max_iters = iters;
  cfg.seed = seed;
  return cfg;
}

TEST(VariantConfig, NamesMapToSwitches) {
  const auto& names = variant_names();
  ASSERT_EQ(names.size(), 8u);
  for (const auto n : names) EXPECT_EQ(VariantConfig::named(n).name(), n);
  const auto h = VariantConfig::named("HWEAVOA");
  EXPECT_TRUE(h.use_henon_elite && h.use_weight && h.use_rlc);
  const auto a = VariantConfig::named("avoa");
  EXPECT_FALSE(a.use_henon_elite || a.use_weight || a.use_rlc);
  const auto we = VariantConfig::named("weavoa");
  EXPECT_FALSE(we.use_henon_elite);
  EXPECT_TRUE(we.use_weight && we.use_rlc);
  EXPECT_THROW(VariantConfig::named("gwo"), std::invalid_argument);
}

TEST(VariantConfig, ValidateRejectsBadSettings) {
  auto cfg = small("avoa");
  cfg.pop_size = 1;
  EXPECT_THROW(cfg.validate(), PopulationTooSmall);
  cfg = small("avoa");
  cfg.max_iters = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small("avoa");
  cfg.avoa.p1 = 1.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small("avoa");
  cfg.avoa.alpha = 0.5;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Engine, InitialEvaluationBudget) {
  const auto problem = benchmarks::make_problem(1);
  for (auto [name, expected] : {std::pair{"avoa", 30}, std::pair{"havoa", 60}}) {
    CountedProblem counted(problem);
    RandomSource rng(1);
    const auto pop = initialize(small(name), counted, rng);
    EXPECT_EQ(counted.evaluations(), expected) << name;
    EXPECT_EQ(pop.members.size(), 30u);
  }
}

TEST(Engine, StepEvaluationBudget) {
  const auto problem = benchmarks::make_problem(1);
  for (auto [name, per_step] : {std::pair{"avoa", 30}, std::pair{"eavoa", 60}}) {
    CountedProblem counted(problem);
    RandomSource rng(2);
    const auto cfg = small(name);
    auto pop = initialize(cfg, counted, rng);
    const auto before = counted.evaluations();
    pop = step(std::move(pop), 1, cfg, counted, rng);
    EXPECT_EQ(counted.evaluations() - before, per_step) << name;
  }
}

TEST(Engine, TotalBudgetFormula) {
  const auto problem = benchmarks::make_problem(9, 5);
  for (const auto name : variant_names()) {
    const auto cfg = small(name, 12, 17, 4);
    const auto rec = run(cfg, problem);
    const std::int64_t n = cfg.pop_size;
    const std::int64_t expected =
        n * (1 + cfg.use_henon_elite) + cfg.max_iters * n * (1 + cfg.use_rlc);
    EXPECT_EQ(rec.evaluations_used, expected) << name;
    ASSERT_EQ(rec.evaluations_per_iteration.size(), 17u);
    EXPECT_EQ(rec.evaluations_per_iteration.back(), expected);
    EXPECT_EQ(rec.evaluations_per_iteration[1] - rec.evaluations_per_iteration[0],
              n * (1 + cfg.use_rlc));
  }
}

TEST(Engine, EliteInitNeverWorseThanPlain) {
  const auto problem = benchmarks::make_problem(1);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CountedProblem c1(problem), c2(problem);
    RandomSource r1(seed), r2(seed);
    const auto plain = initialize(small("avoa"), c1, r1);
    const auto elite = initialize(small("havoa"), c2, r2);
    // HCE draws the uniform half first, so the uniform pools coincide.
    ASSERT_LE(elite.best1.fitness, plain.best1.fitness) << "seed " << seed;
  }
}

TEST(Engine, CurvesMonotoneAndPositionsInBounds) {
  for (int id : {1, 9, 14}) {
    const auto problem = benchmarks::make_problem(id, id == 14 ? 0 : 10);
    for (const auto name : variant_names()) {
      const auto cfg = small(name, 10, 40, 7);
      CountedProblem counted(problem);
      RandomSource rng(cfg.seed);
      auto pop = initialize(cfg, counted, rng);
      double prev = pop.best1.fitness;
      for (int t = 1; t <= cfg.max_iters; ++t) {
        pop = step(std::move(pop), t, cfg, counted, rng);
        ASSERT_LE(pop.best1.fitness, prev) << name << " F" << id << " t=" << t;
        ASSERT_LE(pop.best1.fitness, pop.best2.fitness);
        prev = pop.best1.fitness;
        for (const auto& m : pop.members) ASSERT_TRUE(problem.space().contains(m.position));
        ASSERT_TRUE(problem.space().contains(pop.best1.position));
      }
    }
  }
}

TEST(Engine, RunIsDeterministic) {
  const auto problem = benchmarks::make_problem(10, 8);
  const auto cfg = small("hweavoa", 15, 30, 99);
  const auto a = run(cfg, problem);
  const auto b = run(cfg, problem);
  EXPECT_EQ(a.best_fitness_per_iteration, b.best_fitness_per_iteration);
  EXPECT_EQ(a.final_best.position, b.final_best.position);
  EXPECT_EQ(a.seed, 99u);
  EXPECT_NE(run(small("hweavoa", 15, 30, 100), problem).best_fitness_per_iteration,
            a.best_fitness_per_iteration);
}

TEST(Engine, StepRejectsIterationOutsideRange) {
  const auto problem = benchmarks::make_problem(1, 2);
  CountedProblem counted(problem);
  RandomSource rng(1);
  const auto cfg = small("avoa", 4, 5);
  auto pop = initialize(cfg, counted, rng);
  EXPECT_THROW(step(pop, 0, cfg, counted, rng), std::invalid_argument);
  EXPECT_THROW(step(pop, 6, cfg, counted, rng), std::invalid_argument);
}

TEST(Engine, NaNObjectivePropagatesWithPosition) {
  const auto problem = benchmarks::external_problem(
      "nan", SearchSpace::uniform(2, -1, 1),
      [](std::span<const double> x) { return x[0] > 0.0 ? std::nan("") : x[0] * x[0]; });
  EXPECT_THROW(run(small("avoa", 10, 5), problem), EvaluationError);
}

TEST(Engine, RetainLeadersPrefersOldOnTies) {
  Population pop;
  pop.members = {{{5.0}, 1.0}, {{6.0}, 3.0}};
  pop.best1 = {{1.0}, 1.0};
  pop.best2 = {{2.0}, 2.0};
  pop = retain_leaders(std::move(pop));
  EXPECT_EQ(pop.best1.position, Vector{1.0});
  EXPECT_EQ(pop.best2.position, Vector{5.0});
}

// Straight-line plain AVOA with the same draw order as the engine:
// leader, h, z, rand1, choose, branch draws.
struct Reference {
  static constexpr double kPi = std::numbers::pi;

  static double sphere(const Vector& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
  }

  static std::vector<double> curve(std::uint64_t seed, int n, int T, std::size_t dim) {
    const double lb = -100.0, ub = 100.0;
    const double sigma = kernel::mantegna_sigma(1.5);
    RandomSource rng(seed);
    std::vector<Vulture> flock(static_cast<std::size_t>(n));
    for (auto& v : flock) {
      v.position.resize(dim);
      for (auto& x : v.position) x = rng.uniform(lb, ub);
      v.fitness = sphere(v.position);
    }
    std::vector<Vulture> order = flock;
    std::stable_sort(order.begin(), order.end(),
                     [](const Vulture& a, const Vulture& b) { return a.fitness < b.fitness; });
    Vulture b1 = order[0], b2 = order[1];

    std::vector<double> out;
    for (int t = 1; t <= T; ++t) {
      for (auto& v : flock) {
        const Vector& r = rng.uniform01() < 0.8 ? b1.position : b2.position;
        const double h = rng.uniform(-2.0, 2.0);
        const double z = rng.uniform(-1.0, 1.0);
        const double rand1 = rng.uniform01();
        double f = 0.0;
        if (t != T) {
          const double prog = static_cast<double>(t) / T;
          const double ang = 0.5 * kPi * prog;
          f = (2.0 * rand1 + 1.0) * z * (1.0 - prog) +
              h * (std::pow(std::sin(ang), 2.5) + std::cos(ang) - 1.0);
        }
        const double choose = rng.uniform01();
        Vector np(dim);
        const Vector& p = v.position;
        if (std::abs(f) >= 1.0) {
          if (choose < 0.6) {
            const double x = 2.0 * rng.uniform01();
            for (std::size_t j = 0; j < dim; ++j) np[j] = r[j] - std::abs(x * r[j] - p[j]) * f;
          } else {
            const double r2 = rng.uniform01(), r3 = rng.uniform01();
            for (std::size_t j = 0; j < dim; ++j) np[j] = r[j] - f + r2 * ((ub - lb) * r3 + lb);
          }
        } else if (std::abs(f) >= 0.5) {
          if (choose < 0.4) {
            const double x = 2.0 * rng.uniform01(), r4 = rng.uniform01();
            for (std::size_t j = 0; j < dim; ++j)
              np[j] = std::abs(x * r[j] - p[j]) * (f + r4) - (r[j] - p[j]);
          } else {
            const double r5 = rng.uniform01(), r6 = rng.uniform01();
            for (std::size_t j = 0; j < dim; ++j)
              np[j] = r[j] - (r[j] * (r5 * p[j] / (2.0 * kPi)) * std::cos(p[j]) +
                              r[j] * (r6 * p[j] / (2.0 * kPi)) * std::sin(p[j]));
          }
        } else if (choose < 0.6) {
          for (std::size_t j = 0; j < dim; ++j) {
            auto g = [](double d) { return std::abs(d) >= 1e-12 ? d : (d < 0 ? -1e-12 : 1e-12); };
            const double a1 = b1.position[j] - (b1.position[j] * p[j]) / g(b1.position[j] - p[j] * p[j]) * f;
            const double a2 = b2.position[j] - (b2.position[j] * p[j]) / g(b2.position[j] - p[j] * p[j]) * f;
            np[j] = 0.5 * (a1 + a2);
          }
        } else {
          Vector levy(dim);
          for (auto& s : levy) {
            const double u = rng.normal(0.0, sigma);
            const double w = rng.normal();
            s = 0.01 * u / std::pow(std::abs(w), 1.0 / 1.5);
          }
          for (std::size_t j = 0; j < dim; ++j) np[j] = r[j] - std::abs(r[j] - p[j]) * f * levy[j];
        }
        for (auto& x : np) x = std::isnan(x) ? 0.0 : std::min(ub, std::max(lb, x));
        v.position = np;
        v.fitness = sphere(np);
      }
      std::vector<Vulture> pool{b1, b2};
      pool.insert(pool.end(), flock.begin(), flock.end());
      std::stable_sort(pool.begin(), pool.end(),
                       [](const Vulture& a, const Vulture& b) { return a.fitness < b.fitness; });
      b1 = pool[0];
      b2 = pool[1];
      out.push_back(b1.fitness);
    }
    return out;
  }
};

TEST(Engine, MatchesStraightLineReference) {
  const auto problem = benchmarks::make_problem(1, 2);
  for (std::uint64_t seed : {1u, 2u, 3u, 77u}) {
    const auto cfg = small("avoa", 6, 10, seed);
    const auto rec = run(cfg, problem);
    const auto ref = Reference::curve(seed, 6, 10, 2);
    ASSERT_EQ(rec.best_fitness_per_iteration, ref) << "seed " << seed;
  }
}

}  // namespace
}  // namespace hweavoa
