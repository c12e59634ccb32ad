#include "hweavoa/types.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hweavoa {

SearchSpace::SearchSpace(Vector lower, Vector upper)
    : lower_(std::move(lower)), upper_(std::move(upper)) {
  if (lower_.empty()) throw std::invalid_argument("SearchSpace: dim must be >= 1");
  if (lower_.size() != upper_.size())
    throw std::length_error("SearchSpace: lower/upper length mismatch");
  for (std::size_t j = 0; j < lower_.size(); ++j) {
    if (!(lower_[j] < upper_[j]))
      throw std::invalid_argument("SearchSpace: lower >= upper on axis " +
                                  std::to_string(j));
  }
}

SearchSpace SearchSpace::uniform(std::size_t dim, double lo, double hi) {
  return SearchSpace(Vector(dim, lo), Vector(dim, hi));
}

bool SearchSpace::contains(std::span<const double> x) const {
  if (x.size() != dim()) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (!(x[j] >= lower_[j] && x[j] <= upper_[j])) return false;
  }
  return true;
}

Problem::Problem(std::string name, SearchSpace space, ObjectiveFn fn)
    : name_(std::move(name)), space_(std::move(space)), fn_(std::move(fn)) {
  if (!fn_) throw std::invalid_argument("Problem: empty objective");
}

double Problem::operator()(std::span<const double> x) const {
  if (x.size() != space_.dim())
    throw std::length_error(name_ + ": expected dimension " + std::to_string(space_.dim()) +
                            ", got " + std::to_string(x.size()));
  const double f = fn_(x);
  if (std::isnan(f)) {
    std::string msg = name_ + ": objective returned NaN at [";
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (j) msg += ", ";
      msg += std::to_string(x[j]);
    }
    throw EvaluationError(msg + "]", Vector(x.begin(), x.end()));
  }
  return f;
}

Vector clamp(std::span<const double> position, const SearchSpace& space) {
  if (position.size() != space.dim())
    throw std::length_error("clamp: position length does not match search space");
  Vector out(position.size());
  for (std::size_t j = 0; j < position.size(); ++j) {
    const double lo = space.lower(j);
    const double hi = space.upper(j);
    out[j] = std::isnan(position[j]) ? 0.5 * (lo + hi) : std::min(hi, std::max(lo, position[j]));
  }
  return out;
}

Population update_leaders(Population pop) {
  if (pop.members.size() < 2)
    throw PopulationTooSmall("update_leaders: need at least 2 members, got " +
                             std::to_string(pop.members.size()));
  std::vector<std::size_t> order(pop.members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::partial_sort(order.begin(), order.begin() + 2, order.end(),
                    [&](std::size_t a, std::size_t b) {
                      const double fa = pop.members[a].fitness;
                      const double fb = pop.members[b].fitness;
                      return fa < fb || (fa == fb && a < b);
                    });
  pop.best1 = pop.members[order[0]];
  pop.best2 = pop.members[order[1]];
  return pop;
}

}  // namespace hweavoa
