#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hweavoa {

using Vector = std::vector<double>;

/// Box-constrained search domain. Every axis satisfies lower < upper.
class SearchSpace {
 public:
  SearchSpace(Vector lower, Vector upper);

  /// Same [lo, hi] interval on every axis.
  static SearchSpace uniform(std::size_t dim, double lo, double hi);

  std::size_t dim() const { return lower_.size(); }
  const Vector& lower() const { return lower_; }
  const Vector& upper() const { return upper_; }
  double lower(std::size_t j) const { return lower_[j]; }
  double upper(std::size_t j) const { return upper_[j]; }

  bool contains(std::span<const double> x) const;

 private:
  Vector lower_;
  Vector upper_;
};

/// One candidate solution. Minimization: lower fitness is better.
struct Vulture {
  Vector position;
  double fitness = std::numeric_limits<double>::infinity();
};

/// The flock plus the two leaders (BestV1, BestV2).
/// Invariant once leaders are set: best1.fitness <= best2.fitness <= every
/// other member's fitness.
struct Population {
  std::vector<Vulture> members;
  Vulture best1;
  Vulture best2;

  std::size_t size() const { return members.size(); }
};

class PopulationTooSmall : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The objective produced a NaN at a point inside the search space.
class EvaluationError : public std::runtime_error {
 public:
  EvaluationError(const std::string& what, Vector position)
      : std::runtime_error(what), position_(std::move(position)) {}
  const Vector& position() const { return position_; }

 private:
  Vector position_;
};

using ObjectiveFn = std::function<double(std::span<const double>)>;

/// An objective bound to its search space. Built-in benchmarks and external
/// (user supplied) problems share this type, so the engine cannot tell them
/// apart.
class Problem {
 public:
  Problem(std::string name, SearchSpace space, ObjectiveFn fn);

  const std::string& name() const { return name_; }
  const SearchSpace& space() const { return space_; }
  std::size_t dim() const { return space_.dim(); }

  /// Throws std::length_error on dimension mismatch and EvaluationError when
  /// the objective returns NaN.
  double operator()(std::span<const double> x) const;

 private:
  std::string name_;
  SearchSpace space_;
  ObjectiveFn fn_;
};

/// Saturates each component to its axis bounds; NaN maps to the axis midpoint.
Vector clamp(std::span<const double> position, const SearchSpace& space);

/// Sets best1/best2 to the two lowest-fitness members. Ties go to the lower
/// member index. Throws PopulationTooSmall for fewer than two members.
Population update_leaders(Population pop);

}  // namespace hweavoa
