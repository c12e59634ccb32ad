#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "hweavoa/harness.hpp"

namespace hweavoa::harness {
namespace {

namespace fs = std::filesystem;

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::path(HWEAVOA_TEST_TMPDIR) / name;
  fs::remove_all(dir);
  return dir;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Campaign tiny(const fs::path& out) {
  Campaign c;
  c.variants = {"avoa", "hweavoa"};
  c.functions = {"F1"};
  c.runs = 3;
  c.base_seed = 10;
  c.output_dir = out;
  c.dim = 4;
  c.pop_size = 8;
  c.max_iters = 15;
  c.record_wall_time = false;
  return c;
}

TEST(Config, ParsesAllKeys) {
  const auto c = parse_campaign(R"(
# smoke
[campaign]
variants = ["avoa", "HWEAVOA"]
functions = ["F1", "f9"]   # trailing comment
runs = 4
base_seed = 123
output_dir = "out/x"
dim = 10
pop_size = 12
max_iters = 80
record_wall_time = false
threads = 2
)");
  EXPECT_EQ(c.variants, (std::vector<std::string>{"avoa", "HWEAVOA"}));
  EXPECT_EQ(c.functions, (std::vector<std::string>{"F1", "f9"}));
  EXPECT_EQ(c.runs, 4);
  EXPECT_EQ(c.base_seed, 123u);
  EXPECT_EQ(c.output_dir, fs::path("out/x"));
  EXPECT_EQ(c.dim, 10u);
  EXPECT_EQ(c.pop_size, 12);
  EXPECT_EQ(c.max_iters, 80);
  EXPECT_FALSE(c.record_wall_time);
  EXPECT_EQ(c.threads, 2);
}

TEST(Config, RejectsMalformedInput) {
  const char* bad[] = {
      "runs = zero",
      "variants = [\"avoa\"]\nfunctions = [\"F1\"]\nrunss = 3",
      "variants = avoa",
      "no equals sign",
      "runs = -3",
      "record_wall_time = maybe",
      "[other]\nruns = 3",
  };
  for (const char* text : bad) EXPECT_THROW(parse_campaign(text), ConfigError) << text;
}

TEST(Config, ValidationCatchesBadValues) {
  auto c = tiny("unused");
  c.runs = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c = tiny("unused");
  c.variants = {"nope"};
  EXPECT_THROW(c.validate(), ConfigError);
  c = tiny("unused");
  c.functions = {"F99"};
  EXPECT_THROW(c.validate(), ConfigError);
  c = tiny("unused");
  c.pop_size = 1;
  EXPECT_THROW(c.validate(), ConfigError);
  EXPECT_THROW(load_campaign("/nonexistent/campaign.toml"), ConfigError);
}

TEST(Campaign, CardinalityAndSeeds) {
  const auto result = execute_campaign(tiny("unused"));
  ASSERT_EQ(result.runs.size(), 6u);
  EXPECT_EQ(result.runs[0].variant, "avoa");
  EXPECT_EQ(result.runs[5].variant, "hweavoa");
  for (std::size_t i = 0; i < 6; ++i) {
    EXPECT_EQ(result.runs[i].run, static_cast<int>(i % 3));
    EXPECT_EQ(result.runs[i].record.seed, 10u + i % 3);
  }
  EXPECT_EQ(result.table.samples("avoa", "F1").size(), 3u);
  EXPECT_EQ(result.table.samples("hweavoa", "F1").size(), 3u);
}

TEST(Campaign, OutputsAreByteIdenticalWithoutTiming) {
  const auto a = scratch("det_a"), b = scratch("det_b"), c = scratch("det_c");
  run_campaign(tiny(a));
  run_campaign(tiny(b));
  auto threaded = tiny(c);
  threaded.threads = 3;
  run_campaign(threaded);
  for (const char* f : {"results.csv", "curves.csv", "stats.json"}) {
    const auto first = slurp(a / f);
    EXPECT_FALSE(first.empty()) << f;
    EXPECT_EQ(first, slurp(b / f)) << f;
    EXPECT_EQ(first, slurp(c / f)) << f;
  }
}

TEST(Campaign, ResultsCsvRoundTrip) {
  const auto dir = scratch("roundtrip");
  const auto result = run_campaign(tiny(dir));
  const auto table = read_results_csv(dir / "results.csv");
  EXPECT_EQ(table.algorithms(), result.table.algorithms());
  EXPECT_EQ(table.functions(), result.table.functions());
  for (const auto& alg : table.algorithms())
    EXPECT_EQ(table.samples(alg, "F1"), result.table.samples(alg, "F1")) << alg;
  EXPECT_EQ(stats_json(compute_stats(table)), slurp(dir / "stats.json"));
}

TEST(Campaign, ResultsCsvRejectsWrongHeader) {
  EXPECT_THROW(parse_results_csv("a,b,c\n"), std::invalid_argument);
  EXPECT_THROW(parse_results_csv(""), std::invalid_argument);
  EXPECT_THROW(parse_results_csv("variant,function,run,seed,final_fitness,evals,wall_time_s\n"
                                 "avoa,F1,0,1,notanumber,10,0\n"),
               std::invalid_argument);
}

TEST(Campaign, UnwritableDirectoryFailsBeforeRunning) {
  auto c = tiny("/proc/hweavoa_cannot_write");
  try {
    run_campaign(c);
    FAIL() << "expected an I/O error";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/proc/hweavoa_cannot_write"), std::string::npos);
  }
}

TEST(Campaign, EmitRejectsEmptyResult) {
  EXPECT_THROW(emit_results(CampaignResult{}, scratch("empty")), std::invalid_argument);
}

TEST(Campaign, SingleAlgorithmHasNoWilcoxonPairs) {
  auto c = tiny("unused");
  c.variants = {"hweavoa"};
  const auto report = compute_stats(execute_campaign(c).table);
  EXPECT_TRUE(report.wilcoxon.empty());
  ASSERT_EQ(report.friedman.size(), 1u);
  EXPECT_EQ(report.friedman[0].avg_rank, 1.0);
  EXPECT_EQ(report.table.size(), 1u);
}

TEST(Campaign, CurvesRecordCumulativeEvaluations) {
  auto c = tiny("unused");
  c.variants = {"eavoa"};
  c.runs = 1;
  const auto csv = curves_csv(execute_campaign(c));
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "variant,function,run,iter,best_fitness,evals");
  std::vector<long> evals;
  while (std::getline(in, line)) evals.push_back(std::stol(line.substr(line.rfind(',') + 1)));
  ASSERT_EQ(evals.size(), 15u);
  EXPECT_EQ(evals[0], 8 + 16);
  for (std::size_t i = 1; i < evals.size(); ++i) EXPECT_EQ(evals[i] - evals[i - 1], 16);
}

TEST(Complexity, ScoreFormula) {
  EXPECT_EQ(complexity_score(0.5, 2.0, 2.0), 0.0);
  EXPECT_EQ(complexity_score(0.5, 1.0, 3.0), 4.0);
  EXPECT_THROW(complexity_score(0.0, 1.0, 2.0), std::invalid_argument);
}

TEST(Complexity, ProtocolProducesFiniteTimings) {
  const auto r = complexity_protocol(10, 3000, 1);
  EXPECT_GT(r.t0, 0.0);
  EXPECT_GT(r.t1, 0.0);
  EXPECT_GT(r.t2_mean, 0.0);
  EXPECT_TRUE(std::isfinite(r.complexity));
  EXPECT_THROW(complexity_protocol(0, 100, 1), std::invalid_argument);
}

}  // namespace
}  // namespace hweavoa::harness
