// hweavoa: command-line front end for campaigns, statistics and timing.
//
//   hweavoa run --variant hweavoa --function F1 --runs 10 --seed 1 --out out/
//   hweavoa campaign --config campaign.toml
//   hweavoa complexity --dim 10
//   hweavoa stats --in out/
//
// Exit codes: 0 success, 1 configuration error, 2 runtime/evaluation error.

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>

#include "hweavoa/hweavoa.hpp"

namespace {

constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

void print_report(const hweavoa::harness::StatsReport& report) {
  std::printf("%-10s %-5s %14s %14s\n", "variant", "fn", "avg", "std");
  for (const auto& t : report.table)
    std::printf("%-10s %-5s %14.6e %14.6e\n", t.alg.c_str(), t.function.c_str(), t.avg, t.std);
  std::printf("\nFriedman average rank\n");
  for (const auto& r : report.friedman) std::printf("  %-10s %.2f\n", r.algorithm.c_str(), r.avg_rank);
  if (!report.wilcoxon.empty()) {
    std::printf("\nWilcoxon rank-sum (symbol from the first algorithm's side)\n");
    for (const auto& w : report.wilcoxon)
      std::printf("  %-5s %-10s vs %-10s p=%.4e %c\n", w.function.c_str(), w.alg_a.c_str(),
                  w.alg_b.c_str(), w.p, w.symbol);
  }
}

}  // namespace

int main(int argc, char** argv) {
  using namespace hweavoa;

  CLI::App app{"HWEAVOA / AVOA optimizer benchmark harness"};
  app.require_subcommand(1);

  harness::Campaign run_opts;
  std::string variant = "hweavoa";
  std::string function;
  bool no_timing = false;
  auto* run_cmd = app.add_subcommand("run", "Run one variant on one function for several seeds");
  run_cmd->add_option("--variant", variant, "avoa|havoa|wavoa|eavoa|hwavoa|heavoa|weavoa|hweavoa")
      ->capture_default_str();
  run_cmd->add_option("--function", function, "Benchmark id F1..F23")->required();
  run_cmd->add_option("--dim", run_opts.dim, "Dimension for F1-F13 (0 = default 30)")
      ->capture_default_str();
  run_cmd->add_option("--pop", run_opts.pop_size, "Population size")->capture_default_str();
  run_cmd->add_option("--iters", run_opts.max_iters, "Maximum iterations")->capture_default_str();
  run_cmd->add_option("--runs", run_opts.runs, "Independent runs")->capture_default_str();
  run_cmd->add_option("--seed", run_opts.base_seed, "Base seed; run r uses seed + r")
      ->capture_default_str();
  run_cmd->add_option("--out", run_opts.output_dir, "Output directory")->capture_default_str();
  run_cmd->add_option("--threads", run_opts.threads, "Worker threads")->capture_default_str();
  run_cmd->add_flag("--no-timing", no_timing, "Write 0 for wall_time_s (reproducible output)");

  std::string config_path;
  auto* campaign_cmd = app.add_subcommand("campaign", "Run a campaign described by a config file");
  campaign_cmd->add_option("--config", config_path, "Campaign config (key = value)")->required();

  std::size_t complexity_dim = 10;
  std::int64_t complexity_evals = 200000;
  int complexity_repeats = 5;
  auto* complexity_cmd = app.add_subcommand("complexity", "Algorithm complexity timing protocol");
  complexity_cmd->add_option("--dim", complexity_dim, "Problem dimension")
      ->check(CLI::IsMember({10, 20}))
      ->capture_default_str();
  complexity_cmd->add_option("--evals", complexity_evals, "Evaluation budget")
      ->capture_default_str();
  complexity_cmd->add_option("--repeats", complexity_repeats, "Timed algorithm runs")
      ->capture_default_str();

  std::string stats_dir;
  auto* stats_cmd = app.add_subcommand("stats", "Recompute statistics from a results directory");
  stats_cmd->add_option("--in", stats_dir, "Directory containing results.csv")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  harness::Campaign campaign;
  try {
    if (*run_cmd) {
      campaign = run_opts;
      campaign.variants = {variant};
      campaign.functions = {function};
      campaign.record_wall_time = !no_timing;
      campaign.validate();
    } else if (*campaign_cmd) {
      campaign = harness::load_campaign(config_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (*run_cmd || *campaign_cmd) {
      const auto result = harness::run_campaign(campaign);
      for (const auto& entry : result.runs)
        for (const auto& w : entry.record.warnings) std::cerr << "warning: " << w << "\n";
      print_report(harness::compute_stats(result.table));
      std::printf("\nwrote %s/{results.csv,curves.csv,stats.json}\n",
                  campaign.output_dir.string().c_str());
    } else if (*complexity_cmd) {
      const auto c = harness::complexity_protocol(complexity_dim, complexity_evals, complexity_repeats);
      std::printf("dim=%zu T0=%.6f T1=%.6f T2=%.6f complexity=(T2-T1)/T0=%.2f\n", complexity_dim,
                  c.t0, c.t1, c.t2_mean, c.complexity);
    } else if (*stats_cmd) {
      const std::filesystem::path dir(stats_dir);
      const auto table = harness::read_results_csv(dir / "results.csv");
      const auto report = harness::compute_stats(table);
      harness::write_file(dir / "stats.json", harness::stats_json(report));
      print_report(report);
    }
  } catch (const harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
