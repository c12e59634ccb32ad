#pragma once

// Experiment campaigns over (variant x function x seed), their on-disk
// artifacts, and the algorithm-complexity timing protocol.
//
// Output files written into Campaign::output_dir:
//   results.csv  variant,function,run,seed,final_fitness,evals,wall_time_s
//   curves.csv   variant,function,run,iter,best_fitness,evals
//   stats.json   {"friedman": [...], "wilcoxon": [...], "table": [...]}

#include <cstdint>
#include <filesystem>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hweavoa/engine.hpp"
#include "hweavoa/stats.hpp"

namespace hweavoa::harness {

/// Malformed or invalid campaign configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Campaign {
  std::vector<std::string> variants;   // e.g. "avoa", "hweavoa"
  std::vector<std::string> functions;  // "F1".."F23"
  int runs = 10;
  std::uint64_t base_seed = 1;  // run r uses base_seed + r
  std::filesystem::path output_dir = "results";
  std::size_t dim = 0;  // 0: each function's default dimension
  int pop_size = 30;
  int max_iters = 500;
  bool record_wall_time = true;  // false writes 0 so results.csv is reproducible
  int threads = 1;

  /// Throws ConfigError.
  void validate() const;
};

/// Parses the flat key = value config format (TOML subset): integers,
/// booleans, "strings" and ["lists", "of", "strings"]; `#` starts a comment;
/// an optional [campaign] header is accepted.
Campaign parse_campaign(std::string_view text);
Campaign load_campaign(const std::filesystem::path& path);

struct RunEntry {
  std::string variant;
  std::string function;
  int run = 0;
  RunRecord record;
};

struct CampaignResult {
  std::vector<RunEntry> runs;  // variant-major, then function, then run
  stats::ResultTable table;    // final fitness per run
};

/// Executes every run in memory. Runs may execute on Campaign::threads
/// workers; the result order does not depend on scheduling.
CampaignResult execute_campaign(const Campaign& campaign);

/// Checks the output directory first, executes, then writes all three files.
CampaignResult run_campaign(const Campaign& campaign);

struct WilcoxonEntry {
  std::string alg_a;
  std::string alg_b;
  std::string function;
  double p;
  char symbol;  // from alg_a's point of view
};

struct TableEntry {
  std::string alg;
  std::string function;
  double avg;
  double std;
};

struct StatsReport {
  std::vector<stats::AlgorithmRank> friedman;
  std::vector<WilcoxonEntry> wilcoxon;
  std::vector<TableEntry> table;
};

StatsReport compute_stats(const stats::ResultTable& table);

std::string results_csv(const CampaignResult& result, bool record_wall_time);
std::string curves_csv(const CampaignResult& result);
std::string stats_json(const StatsReport& report);

/// Writes results.csv, curves.csv and stats.json. Throws std::invalid_argument
/// for an empty table and std::runtime_error (naming the path) on I/O failure.
void emit_results(const CampaignResult& result, const std::filesystem::path& dir,
                  bool record_wall_time = true);

/// Rebuilds the (variant, function) -> final fitness table from results.csv.
stats::ResultTable parse_results_csv(std::string_view text);
stats::ResultTable read_results_csv(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view contents);

struct ComplexityResult {
  double t0;       // reference arithmetic loop
  double t1;       // bare objective evaluations
  double t2_mean;  // full algorithm, same evaluation budget
  double complexity;
};

/// (T2 - T1) / T0. Throws std::invalid_argument unless T0 > 0.
double complexity_score(double t0, double t1, double t2);

/// Times HWEAVOA on F1 at `dim` with `evaluations` objective calls, averaged
/// over `repeats` runs.
ComplexityResult complexity_protocol(std::size_t dim, std::int64_t evaluations = 200000,
                                     int repeats = 5);

}  // namespace hweavoa::harness
