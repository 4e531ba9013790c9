#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "trajsc/bench/sampler.hpp"
#include "trajsc/pipeline.hpp"

namespace trajsc::bench {

/// Flat benchmark configuration (the config-file keys of the CLI).
struct BenchConfig {
  std::uint64_t seed = 0;
  int n_samples = 19;
  double correct_rate = 0.65;
  double tau = 0.5;
  std::vector<std::string> criteria = {"majority", "hierarchical", "most",
                                       "least", "hierarchical_multi"};
  bool include_oracle = true;
  DistractorMode distractor_mode = DistractorMode::OtherShape;
  double noise_px = 0.0;
  std::vector<double> tau_sweep;  // extra report rows per τ when non-empty
  std::vector<int> n_sweep;       // extra report rows per sample count
  IcpConfig icp;
};

BenchConfig bench_config_from_json(const nlohmann::json& j);
nlohmann::json bench_config_to_json(const BenchConfig& cfg);

/// A generated benchmark: tasks plus labeled samples and queries. Samples
/// are stored at the largest requested sample count; evaluating a smaller N
/// uses the prefix (the sampler emits samples sequentially, so prefixes are
/// bit-identical to a run at the smaller count).
struct BenchmarkData {
  std::vector<BenchmarkTask> tasks;
  std::vector<std::vector<LabeledTrajectory>> samples;
  std::vector<std::vector<LabeledTrajectory>> queries;
};

BenchmarkData generate_benchmark(const BenchConfig& cfg);
void save_benchmark(const BenchmarkData& data, const std::filesystem::path& dir);
BenchmarkData load_benchmark(const std::filesystem::path& dir);

struct ReportRow {
  std::string criterion;
  double tau = 0.5;
  int n_samples = 19;
  double accuracy = 0.0;
  double direct_accuracy = 0.0;
  double precision = 0.0, recall = 0.0, f1 = 0.0;
};

struct BenchReport {
  nlohmann::json config;
  std::vector<ReportRow> rows;
  nlohmann::json per_task;              // chosen groups and purities for audit
  std::vector<std::string> failed_tasks;  // named and skipped, run continues
};

/// Evaluates every requested criterion (plus the per-task ground-truth
/// oracle) at every requested τ and sample count. Distance matrices are
/// built once per task at the largest N with the smallest τ as the early
/// stop, then re-thresholded; membership and verification distances are
/// cached by trajectory id, so results are deterministic and independent
/// of scheduling.
BenchReport evaluate_benchmark(const BenchmarkData& data, const BenchConfig& cfg);

nlohmann::json report_to_json(const BenchReport& report);
std::string report_table(const BenchReport& report);

}  // namespace trajsc::bench
