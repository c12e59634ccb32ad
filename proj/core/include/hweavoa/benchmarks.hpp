#pragma once

// The 23 classical test functions: unimodal F1-F7, multimodal F8-F13 and
// fixed-dimension multimodal F14-F23.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hweavoa/types.hpp"

namespace hweavoa::benchmarks {

struct BenchmarkSpec {
  int id;  // 1..23
  std::string name;
  std::size_t default_dim;
  bool fixed_dim;  // F14-F23 only accept default_dim
  double lower;
  double upper;
  /// Tabulated optimum at default_dim. F8 scales with dimension, see optimum().
  double known_optimum;
  /// A minimizer when it is simple or tabulated in the literature.
  std::optional<Vector> optimum_location;

  std::string label() const { return "F" + std::to_string(id); }
  double optimum(std::size_t dim) const;
};

const std::vector<BenchmarkSpec>& registry();

/// Throws std::out_of_range for ids outside 1..23.
const BenchmarkSpec& spec(int id);

/// Accepts "F7", "f7" or "7".
int parse_id(std::string_view label);

/// Throws std::invalid_argument on a bad id or a dimension the function does
/// not accept.
double evaluate(int id, std::span<const double> x);

/// A built-in function as an engine problem; dim 0 means default_dim.
Problem make_problem(int id, std::size_t dim = 0);

/// Wraps a user-supplied objective so the engine can run it exactly like a
/// built-in benchmark.
Problem external_problem(std::string name, SearchSpace space, ObjectiveFn evaluator);

/// Constant tables of the fixed-dimension families, exposed for checksumming.
namespace tables {
extern const double kFoxholes[2][25];
extern const double kKowalikA[11];
extern const double kKowalikB[11];
extern const double kHartmann3A[4][3];
extern const double kHartmann3P[4][3];
extern const double kHartmann6A[4][6];
extern const double kHartmann6P[4][6];
extern const double kHartmannC[4];
extern const double kShekelA[10][4];
extern const double kShekelC[10];
}  // namespace tables

}  // namespace hweavoa::benchmarks
