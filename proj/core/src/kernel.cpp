#include "hweavoa/kernel.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hweavoa::kernel {
namespace {

constexpr double kPi = std::numbers::pi;

void require_same_dim(std::span<const double> a, std::span<const double> b, const char* op) {
  if (a.size() != b.size())
    throw std::length_error(std::string(op) + ": dimension mismatch (" +
                            std::to_string(a.size()) + " vs " + std::to_string(b.size()) + ")");
}

bool is_probability(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

void AvoaParams::validate() const {
  if (!is_probability(p1) || !is_probability(p2) || !is_probability(p3))
    throw std::invalid_argument("AvoaParams: p1, p2, p3 must lie in [0, 1]");
  if (!is_probability(alpha) || !is_probability(beta))
    throw std::invalid_argument("AvoaParams: alpha, beta must lie in [0, 1]");
  if (std::abs(alpha + beta - 1.0) > 1e-12)
    throw std::invalid_argument("AvoaParams: alpha + beta must equal 1");
  if (!(w > 0.0)) throw std::invalid_argument("AvoaParams: w must be positive");
}

HungerState hunger_rate(int t, int max_iters, double w, double h, double z, double rand1) {
  if (max_iters < 1) throw std::invalid_argument("hunger_rate: max_iters must be >= 1");
  if (t < 0 || t > max_iters)
    throw std::invalid_argument("hunger_rate: iteration " + std::to_string(t) +
                                " outside [0, " + std::to_string(max_iters) + "]");
  // At t == T both factors vanish analytically; cos(pi/2) is not exactly 0 in
  // floating point, so pin the endpoint.
  if (t == max_iters) return {0.0, 0.0};
  const double progress = static_cast<double>(t) / max_iters;
  const double angle = 0.5 * kPi * progress;
  const double m = h * (std::pow(std::sin(angle), w) + std::cos(angle) - 1.0);
  const double f = (2.0 * rand1 + 1.0) * z * (1.0 - progress) + m;
  return {f, m};
}

std::span<const double> select_leader(const Population& pop, double alpha, double /*beta*/,
                                      double draw) {
  return draw < alpha ? std::span<const double>(pop.best1.position)
                      : std::span<const double>(pop.best2.position);
}

Vector explore_step(std::span<const double> p, std::span<const double> leader, double rate,
                    const SearchSpace& space, double choose, double p1,
                    const ExploreDraws& draws) {
  require_same_dim(p, leader, "explore_step");
  require_same_dim(p, space.lower(), "explore_step");
  Vector out(p.size());
  if (choose < p1) {
    const double x = 2.0 * draws.rand_x;
    for (std::size_t j = 0; j < p.size(); ++j)
      out[j] = leader[j] - std::abs(x * leader[j] - p[j]) * rate;
  } else {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const double lb = space.lower(j);
      const double ub = space.upper(j);
      out[j] = leader[j] - rate + draws.rand2 * ((ub - lb) * draws.rand3 + lb);
    }
  }
  return out;
}

Vector exploit_stage1_step(std::span<const double> p, std::span<const double> leader,
                           double rate, double choose, double p2, const ConflictDraws& draws) {
  require_same_dim(p, leader, "exploit_stage1_step");
  Vector out(p.size());
  if (choose < p2) {
    const double x = 2.0 * draws.rand_x;
    for (std::size_t j = 0; j < p.size(); ++j)
      out[j] = std::abs(x * leader[j] - p[j]) * (rate + draws.rand4) - (leader[j] - p[j]);
  } else {
    for (std::size_t j = 0; j < p.size(); ++j) {
      const double s1 = leader[j] * (draws.rand5 * p[j] / (2.0 * kPi)) * std::cos(p[j]);
      const double s2 = leader[j] * (draws.rand6 * p[j] / (2.0 * kPi)) * std::sin(p[j]);
      out[j] = leader[j] - (s1 + s2);
    }
  }
  return out;
}

namespace {

double guarded(double denominator) {
  if (std::abs(denominator) >= kDenominatorGuard) return denominator;
  return denominator < 0.0 ? -kDenominatorGuard : kDenominatorGuard;
}

}  // namespace

Vector exploit_stage2_step(std::span<const double> p, const Population& leaders,
                           std::span<const double> leader, double rate, double choose,
                           double p3, std::span<const double> levy) {
  require_same_dim(p, leader, "exploit_stage2_step");
  Vector out(p.size());
  if (choose < p3) {
    const Vector& b1 = leaders.best1.position;
    const Vector& b2 = leaders.best2.position;
    require_same_dim(p, b1, "exploit_stage2_step");
    require_same_dim(p, b2, "exploit_stage2_step");
    for (std::size_t j = 0; j < p.size(); ++j) {
      const double p_sq = p[j] * p[j];
      const double a1 = b1[j] - (b1[j] * p[j]) / guarded(b1[j] - p_sq) * rate;
      const double a2 = b2[j] - (b2[j] * p[j]) / guarded(b2[j] - p_sq) * rate;
      out[j] = 0.5 * (a1 + a2);
    }
  } else {
    require_same_dim(p, levy, "exploit_stage2_step");
    for (std::size_t j = 0; j < p.size(); ++j)
      out[j] = leader[j] - std::abs(leader[j] - p[j]) * rate * levy[j];
  }
  return out;
}

double mantegna_sigma(double index) {
  const double num = std::tgamma(1.0 + index) * std::sin(kPi * index / 2.0);
  const double den = std::tgamma((1.0 + index) / 2.0) * index * std::pow(2.0, (index - 1.0) / 2.0);
  return std::pow(num / den, 1.0 / index);
}

Vector levy_flight(std::size_t dim, RandomSource& rng) {
  if (dim < 1) throw std::invalid_argument("levy_flight: dim must be >= 1");
  static const double sigma = mantegna_sigma(kLevyIndex);
  Vector steps(dim);
  for (auto& s : steps) {
    const double u = rng.normal(0.0, sigma);
    const double v = rng.normal();
    s = kLevyScale * u / std::pow(std::abs(v), 1.0 / kLevyIndex);
  }
  return steps;
}

}  // namespace hweavoa::kernel
