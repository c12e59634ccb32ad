#include "hweavoa/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace hweavoa::stats {

Summary avg_std(std::span<const double> samples) {
  if (samples.empty()) throw std::invalid_argument("avg_std: no samples");
  const double n = static_cast<double>(samples.size());
  double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  // second pass removes the rounding error of the naive mean
  double residual = 0.0;
  for (double v : samples) residual += v - mean;
  mean += residual / n;
  double ss = 0.0;
  for (double v : samples) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / n)};
}

void ResultTable::add(const std::string& algorithm, const std::string& function, double value) {
  if (std::find(algorithms_.begin(), algorithms_.end(), algorithm) == algorithms_.end())
    algorithms_.push_back(algorithm);
  if (std::find(functions_.begin(), functions_.end(), function) == functions_.end())
    functions_.push_back(function);
  cells_[{algorithm, function}].push_back(value);
}

const std::vector<double>& ResultTable::samples(const std::string& algorithm,
                                                const std::string& function) const {
  static const std::vector<double> empty;
  const auto it = cells_.find({algorithm, function});
  return it == cells_.end() ? empty : it->second;
}

void ResultTable::validate() const {
  if (algorithms_.empty() || functions_.empty())
    throw std::invalid_argument("ResultTable: no algorithms or no functions");
  for (const auto& a : algorithms_)
    for (const auto& f : functions_)
      if (samples(a, f).empty())
        throw std::invalid_argument("ResultTable: missing cell (" + a + ", " + f + ")");
}

std::vector<int> competition_ranks(std::span<const double> values) {
  std::vector<int> ranks(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    int better = 0;
    for (double other : values) better += other < values[i] ? 1 : 0;
    ranks[i] = better + 1;
  }
  return ranks;
}

std::vector<double> friedman_avg_ranks(const std::vector<std::vector<double>>& scores) {
  if (scores.empty()) throw std::invalid_argument("friedman_avg_ranks: no functions");
  const std::size_t k = scores.front().size();
  if (k == 0) throw std::invalid_argument("friedman_avg_ranks: no algorithms");
  std::vector<double> totals(k, 0.0);
  for (const auto& row : scores) {
    if (row.size() != k) throw std::invalid_argument("friedman_avg_ranks: ragged score matrix");
    const auto ranks = competition_ranks(row);
    for (std::size_t j = 0; j < k; ++j) totals[j] += ranks[j];
  }
  for (auto& t : totals) t /= static_cast<double>(scores.size());
  return totals;
}

std::vector<AlgorithmRank> friedman_avg_ranks(const ResultTable& table) {
  table.validate();
  std::vector<std::vector<double>> means;
  for (const auto& f : table.functions()) {
    std::vector<double> row;
    for (const auto& a : table.algorithms()) row.push_back(avg_std(table.samples(a, f)).avg);
    means.push_back(std::move(row));
  }
  const auto avg = friedman_avg_ranks(means);
  std::vector<AlgorithmRank> out;
  for (std::size_t j = 0; j < avg.size(); ++j) out.push_back({table.algorithms()[j], avg[j]});
  return out;
}

double wilcoxon_ranksum_p(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("wilcoxon_ranksum_p: empty sample");

  struct Obs {
    double value;
    bool first;
  };
  std::vector<Obs> pooled;
  pooled.reserve(a.size() + b.size());
  for (double v : a) pooled.push_back({v, true});
  for (double v : b) pooled.push_back({v, false});
  std::sort(pooled.begin(), pooled.end(),
            [](const Obs& x, const Obs& y) { return x.value < y.value; });

  const double n1 = static_cast<double>(a.size());
  const double n2 = static_cast<double>(b.size());
  const double n = n1 + n2;
  double rank_sum = 0.0;
  double tie_term = 0.0;  // sum of t^3 - t over tie groups
  for (std::size_t i = 0; i < pooled.size();) {
    std::size_t j = i;
    while (j + 1 < pooled.size() && pooled[j + 1].value == pooled[i].value) ++j;
    const double midrank = 0.5 * static_cast<double>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k)
      if (pooled[k].first) rank_sum += midrank;
    const double t = static_cast<double>(j - i + 1);
    tie_term += t * t * t - t;
    i = j + 1;
  }

  const double mean = n1 * (n + 1.0) / 2.0;
  double variance = n1 * n2 * (n + 1.0) / 12.0;
  if (n > 1.0) variance -= n1 * n2 * tie_term / (12.0 * n * (n - 1.0));
  if (!(variance > 0.0)) return 1.0;
  const double z = (rank_sum - mean) / std::sqrt(variance);
  return std::min(1.0, std::erfc(std::abs(z) / std::numbers::sqrt2));
}

char significance_symbol(double p, std::span<const double> ours, std::span<const double> theirs,
                         double alpha) {
  if (p >= alpha) return '=';
  return avg_std(ours).avg < avg_std(theirs).avg ? '+' : '-';
}

}  // namespace hweavoa::stats
