#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hweavoa::stats {

struct Summary {
  double avg;
  double std;  // population convention (divide by n)
};

/// Throws std::invalid_argument on an empty sample.
Summary avg_std(std::span<const double> samples);

/// Per-run final fitnesses indexed by (algorithm, function). Row and column
/// order is insertion order.
class ResultTable {
 public:
  void add(const std::string& algorithm, const std::string& function, double value);

  const std::vector<std::string>& algorithms() const { return algorithms_; }
  const std::vector<std::string>& functions() const { return functions_; }

  /// Empty when the cell was never filled.
  const std::vector<double>& samples(const std::string& algorithm,
                                     const std::string& function) const;

  /// Throws std::invalid_argument if the table is empty or any cell is empty.
  void validate() const;

  bool operator==(const ResultTable&) const = default;

 private:
  std::vector<std::string> algorithms_;
  std::vector<std::string> functions_;
  std::map<std::pair<std::string, std::string>, std::vector<double>> cells_;
};

/// Competition ranking ("1224"): ascending, ties share the smallest rank.
std::vector<int> competition_ranks(std::span<const double> values);

/// Average rank of each algorithm (column) over the functions (rows) of a
/// score matrix; lower score is better. Throws on a ragged matrix.
std::vector<double> friedman_avg_ranks(const std::vector<std::vector<double>>& scores);

struct AlgorithmRank {
  std::string algorithm;
  double avg_rank;
};

/// Friedman average ranks over the table's cell means.
std::vector<AlgorithmRank> friedman_avg_ranks(const ResultTable& table);

/// Two-sided Wilcoxon rank-sum p-value, normal approximation with midranks and
/// tie-corrected variance. All observations tied gives p = 1.
double wilcoxon_ranksum_p(std::span<const double> a, std::span<const double> b);

/// '=' when p >= alpha; otherwise '+' if ours has the lower mean, else '-'.
char significance_symbol(double p, std::span<const double> ours, std::span<const double> theirs,
                         double alpha = 0.05);

}  // namespace hweavoa::stats
