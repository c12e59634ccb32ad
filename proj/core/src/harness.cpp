#include "hweavoa/harness.hpp"

#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <mutex>
#include <nlohmann/json.hpp>
#include <sstream>
#include <thread>

#include "hweavoa/benchmarks.hpp"

namespace hweavoa::harness {
namespace {

std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw std::invalid_argument("results.csv line " + std::to_string(line) + ": bad number '" +
                                std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

void ensure_writable_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw std::runtime_error("cannot create output directory '" + dir.string() +
                             "': " + (ec ? ec.message() : "not a directory"));
  const auto probe = dir / ".write_probe";
  {
    std::ofstream out(probe);
    if (!out) throw std::runtime_error("output directory '" + dir.string() + "' is not writable");
  }
  std::filesystem::remove(probe, ec);
}

}  // namespace

void Campaign::validate() const {
  if (variants.empty()) throw ConfigError("campaign: no variants");
  if (functions.empty()) throw ConfigError("campaign: no functions");
  if (runs < 1) throw ConfigError("campaign: runs must be >= 1");
  if (pop_size < 2) throw ConfigError("campaign: pop_size must be >= 2");
  if (max_iters < 1) throw ConfigError("campaign: max_iters must be >= 1");
  if (threads < 1) throw ConfigError("campaign: threads must be >= 1");
  try {
    for (const auto& v : variants) (void)VariantConfig::named(v);
    for (const auto& f : functions) {
      const int id = benchmarks::parse_id(f);
      (void)benchmarks::make_problem(id, benchmarks::spec(id).fixed_dim ? 0 : dim);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("campaign: ") + e.what());
  }
}

CampaignResult execute_campaign(const Campaign& campaign) {
  campaign.validate();

  struct Job {
    std::string variant;
    std::string function;
    int run;
  };
  std::vector<Job> jobs;
  for (const auto& v : campaign.variants)
    for (const auto& f : campaign.functions)
      for (int r = 0; r < campaign.runs; ++r) jobs.push_back({v, f, r});

  std::vector<RunEntry> entries(jobs.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) {
      try {
        const Job& job = jobs[i];
        VariantConfig cfg = VariantConfig::named(job.variant);
        cfg.pop_size = campaign.pop_size;
        cfg.max_iters = campaign.max_iters;
        cfg.seed = campaign.base_seed + static_cast<std::uint64_t>(job.run);
        const int id = benchmarks::parse_id(job.function);
        const Problem problem =
            benchmarks::make_problem(id, benchmarks::spec(id).fixed_dim ? 0 : campaign.dim);
        entries[i] = {cfg.name(), problem.name(), job.run, run(cfg, problem)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = jobs.size();
      }
    }
  };

  const auto workers = static_cast<std::size_t>(campaign.threads);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  CampaignResult result;
  result.runs = std::move(entries);
  for (const auto& e : result.runs)
    result.table.add(e.variant, e.function, e.record.final_best.fitness);
  return result;
}

CampaignResult run_campaign(const Campaign& campaign) {
  campaign.validate();
  ensure_writable_dir(campaign.output_dir);
  CampaignResult result = execute_campaign(campaign);
  emit_results(result, campaign.output_dir, campaign.record_wall_time);
  return result;
}

StatsReport compute_stats(const stats::ResultTable& table) {
  table.validate();
  StatsReport report;
  report.friedman = stats::friedman_avg_ranks(table);
  const auto& algs = table.algorithms();
  for (const auto& f : table.functions()) {
    for (const auto& a : algs) {
      const auto s = stats::avg_std(table.samples(a, f));
      report.table.push_back({a, f, s.avg, s.std});
    }
    for (std::size_t i = 0; i < algs.size(); ++i) {
      for (std::size_t j = i + 1; j < algs.size(); ++j) {
        const auto& ours = table.samples(algs[i], f);
        const auto& theirs = table.samples(algs[j], f);
        const double p = stats::wilcoxon_ranksum_p(ours, theirs);
        report.wilcoxon.push_back(
            {algs[i], algs[j], f, p, stats::significance_symbol(p, ours, theirs)});
      }
    }
  }
  return report;
}

std::string results_csv(const CampaignResult& result, bool record_wall_time) {
  std::string out = "variant,function,run,seed,final_fitness,evals,wall_time_s\n";
  for (const auto& e : result.runs) {
    out += e.variant + ',' + e.function + ',' + std::to_string(e.run) + ',' +
           std::to_string(e.record.seed) + ',' + fmt(e.record.final_best.fitness) + ',' +
           std::to_string(e.record.evaluations_used) + ',' +
           fmt(record_wall_time ? e.record.wall_time_seconds : 0.0) + '\n';
  }
  return out;
}

std::string curves_csv(const CampaignResult& result) {
  std::string out = "variant,function,run,iter,best_fitness,evals\n";
  for (const auto& e : result.runs) {
    const std::string prefix = e.variant + ',' + e.function + ',' + std::to_string(e.run) + ',';
    const auto& curve = e.record.best_fitness_per_iteration;
    for (std::size_t t = 0; t < curve.size(); ++t) {
      out += prefix + std::to_string(t + 1) + ',' + fmt(curve[t]) + ',' +
             std::to_string(e.record.evaluations_per_iteration[t]) + '\n';
    }
  }
  return out;
}

std::string stats_json(const StatsReport& report) {
  nlohmann::ordered_json j;
  j["friedman"] = nlohmann::ordered_json::array();
  for (const auto& r : report.friedman)
    j["friedman"].push_back({{"alg", r.algorithm}, {"avg_rank", r.avg_rank}});
  j["wilcoxon"] = nlohmann::ordered_json::array();
  for (const auto& w : report.wilcoxon)
    j["wilcoxon"].push_back({{"alg_a", w.alg_a},
                             {"alg_b", w.alg_b},
                             {"function", w.function},
                             {"p", w.p},
                             {"symbol", std::string(1, w.symbol)}});
  j["table"] = nlohmann::ordered_json::array();
  for (const auto& t : report.table)
    j["table"].push_back(
        {{"alg", t.alg}, {"function", t.function}, {"avg", t.avg}, {"std", t.std}});
  return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("failed writing '" + path.string() + "'");
}

void emit_results(const CampaignResult& result, const std::filesystem::path& dir,
                  bool record_wall_time) {
  if (result.runs.empty() || result.table.functions().empty())
    throw std::invalid_argument("emit_results: empty result table");
  const StatsReport report = compute_stats(result.table);
  ensure_writable_dir(dir);
  write_file(dir / "results.csv", results_csv(result, record_wall_time));
  write_file(dir / "curves.csv", curves_csv(result));
  write_file(dir / "stats.json", stats_json(report));
}

stats::ResultTable parse_results_csv(std::string_view text) {
  stats::ResultTable table;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (!header_seen) {
      if (line != "variant,function,run,seed,final_fitness,evals,wall_time_s")
        throw std::invalid_argument("results.csv: unexpected header '" + std::string(line) + "'");
      header_seen = true;
      continue;
    }
    if (fields.size() != 7)
      throw std::invalid_argument("results.csv line " + std::to_string(line_no) +
                                  ": expected 7 fields, got " + std::to_string(fields.size()));
    table.add(std::string(fields[0]), std::string(fields[1]), parse_double(fields[4], line_no));
  }
  if (!header_seen) throw std::invalid_argument("results.csv: empty file");
  return table;
}

stats::ResultTable read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_results_csv(buf.str());
}

double complexity_score(double t0, double t1, double t2) {
  if (!(t0 > 0.0)) throw std::invalid_argument("complexity_score: T0 must be positive");
  return (t2 - t1) / t0;
}

ComplexityResult complexity_protocol(std::size_t dim, std::int64_t evaluations, int repeats) {
  if (dim < 1) throw std::invalid_argument("complexity_protocol: dim must be >= 1");
  if (evaluations < 1 || repeats < 1)
    throw std::invalid_argument("complexity_protocol: evaluations and repeats must be >= 1");
  using clock = std::chrono::steady_clock;
  auto seconds = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
  };

  ComplexityResult out{};
  {
    volatile double sink = 0.0;
    double x = 0.55;
    const auto start = clock::now();
    for (std::int64_t i = 0; i < 200000; ++i) {
      x = x + x;
      x = x / 2;
      x = x * x;
      x = std::sqrt(x);
      x = std::log(x);
      x = std::exp(x);
      x = x / (x + 2);
    }
    sink = x;
    (void)sink;
    out.t0 = seconds(start, clock::now());
  }

  const Problem problem = benchmarks::make_problem(1, dim);
  {
    RandomSource rng(0);
    Vector x(dim);
    for (auto& v : x) v = rng.uniform(-100.0, 100.0);
    volatile double sink = 0.0;
    const auto start = clock::now();
    for (std::int64_t i = 0; i < evaluations; ++i) sink = problem(x);
    (void)sink;
    out.t1 = seconds(start, clock::now());
  }

  VariantConfig cfg = VariantConfig::named("hweavoa");
  // Henon-elite init costs 2N evaluations and every iteration with RLC costs 2N.
  const std::int64_t per_iter = 2 * cfg.pop_size;
  cfg.max_iters = static_cast<int>(std::max<std::int64_t>(1, (evaluations - per_iter) / per_iter));
  double total = 0.0;
  for (int r = 0; r < repeats; ++r) {
    cfg.seed = static_cast<std::uint64_t>(r);
    const auto start = clock::now();
    (void)run(cfg, problem);
    total += seconds(start, clock::now());
  }
  out.t2_mean = total / repeats;
  out.complexity = complexity_score(out.t0, out.t1, out.t2_mean);
  return out;
}

}  // namespace hweavoa::harness
