#include "trajsc/bench/eval.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include "trajsc/errors.hpp"
#include "trajsc/io/json_io.hpp"
#include "trajsc/parallel.hpp"
#include "trajsc/random.hpp"

namespace trajsc::bench {

using nlohmann::json;

namespace {

DistractorMode mode_from_string(const std::string& s) {
  if (s == "other-shape") return DistractorMode::OtherShape;
  if (s == "out-of-group-warp") return DistractorMode::OutOfGroupWarp;
  if (s == "mixed") return DistractorMode::Mixed;
  throw ParseError("unknown distractor_mode: " + s);
}

std::string mode_to_string(DistractorMode m) {
  switch (m) {
    case DistractorMode::OtherShape: return "other-shape";
    case DistractorMode::OutOfGroupWarp: return "out-of-group-warp";
    case DistractorMode::Mixed: return "mixed";
  }
  return "?";
}

}  // namespace

BenchConfig bench_config_from_json(const json& j) {
  BenchConfig cfg;
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("n_samples")) cfg.n_samples = j.at("n_samples").get<int>();
  if (j.contains("correct_rate"))
    cfg.correct_rate = j.at("correct_rate").get<double>();
  if (j.contains("tau")) cfg.tau = j.at("tau").get<double>();
  if (j.contains("criteria"))
    cfg.criteria = j.at("criteria").get<std::vector<std::string>>();
  if (j.contains("include_oracle"))
    cfg.include_oracle = j.at("include_oracle").get<bool>();
  if (j.contains("distractor_mode"))
    cfg.distractor_mode = mode_from_string(j.at("distractor_mode"));
  if (j.contains("noise_px")) cfg.noise_px = j.at("noise_px").get<double>();
  if (j.contains("tau_sweep"))
    cfg.tau_sweep = j.at("tau_sweep").get<std::vector<double>>();
  if (j.contains("n_sweep")) cfg.n_sweep = j.at("n_sweep").get<std::vector<int>>();
  if (j.contains("icp")) cfg.icp = io::icp_config_from_json(j.at("icp"));
  for (const auto& name : cfg.criteria)
    if (!CriterionSpec::parse(name))
      throw ParseError("unknown criterion: " + name);
  return cfg;
}

json bench_config_to_json(const BenchConfig& cfg) {
  return {{"seed", cfg.seed},
          {"n_samples", cfg.n_samples},
          {"correct_rate", cfg.correct_rate},
          {"tau", cfg.tau},
          {"criteria", cfg.criteria},
          {"include_oracle", cfg.include_oracle},
          {"distractor_mode", mode_to_string(cfg.distractor_mode)},
          {"noise_px", cfg.noise_px},
          {"tau_sweep", cfg.tau_sweep},
          {"n_sweep", cfg.n_sweep},
          {"icp", io::config_to_json(cfg.icp)}};
}

namespace {

SamplerConfig sampler_config(const BenchConfig& cfg, int n_samples) {
  SamplerConfig s;
  s.n_samples = n_samples;
  s.correct_rate = cfg.correct_rate;
  s.distractor_mode = cfg.distractor_mode;
  s.noise_px = cfg.noise_px;
  s.rng_seed = cfg.seed;
  return s;
}

int max_samples(const BenchConfig& cfg) {
  int n = cfg.n_samples;
  for (const int v : cfg.n_sweep) n = std::max(n, v);
  return n;
}

double min_tau(const BenchConfig& cfg) {
  double t = cfg.tau;
  for (const double v : cfg.tau_sweep) t = std::min(t, v);
  return t;
}

}  // namespace

BenchmarkData generate_benchmark(const BenchConfig& cfg) {
  BenchmarkData data;
  data.tasks = build_tasks(shape_catalog());
  const SamplerConfig sampler = sampler_config(cfg, max_samples(cfg));

  data.samples.resize(data.tasks.size());
  data.queries.resize(data.tasks.size());
  parallel_for(data.tasks.size(), [&](std::size_t i) {
    data.samples[i] = sample_task(data.tasks[i], sampler);
    data.queries[i] =
        build_verification_set(data.tasks[i], sampler, cfg.tau, cfg.icp);
  });
  return data;
}

void save_benchmark(const BenchmarkData& data, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "samples");
  fs::create_directories(dir / "queries");

  json tasks = json::array();
  for (const auto& t : data.tasks) tasks.push_back(io::to_json(t));
  io::save_json(dir / "tasks.json", tasks);

  json labels = json::object();
  for (std::size_t i = 0; i < data.tasks.size(); ++i) {
    const std::string& id = data.tasks[i].id;
    json samples = json::array(), queries = json::array();
    json sample_labels = json::array(), query_labels = json::array();
    for (const auto& s : data.samples[i]) {
      samples.push_back(io::to_json(s.trajectory));
      sample_labels.push_back(s.truth);
    }
    for (const auto& q : data.queries[i]) {
      queries.push_back(io::to_json(q.trajectory));
      query_labels.push_back(q.truth);
    }
    io::save_json(dir / "samples" / (id + ".traj.json"), samples);
    io::save_json(dir / "queries" / (id + ".traj.json"), queries);
    labels[id] = {{"samples", std::move(sample_labels)},
                  {"queries", std::move(query_labels)}};
  }
  io::save_json(dir / "labels.json", labels);
}

BenchmarkData load_benchmark(const std::filesystem::path& dir) {
  BenchmarkData data;
  const json tasks = io::load_json(dir / "tasks.json");
  const json labels = io::load_json(dir / "labels.json");
  for (const auto& t : tasks) data.tasks.push_back(io::task_from_json(t));

  data.samples.resize(data.tasks.size());
  data.queries.resize(data.tasks.size());
  for (std::size_t i = 0; i < data.tasks.size(); ++i) {
    const std::string& id = data.tasks[i].id;
    const json& l = labels.at(id);
    auto samples = io::load_trajectories(dir / "samples" / (id + ".traj.json"));
    auto queries = io::load_trajectories(dir / "queries" / (id + ".traj.json"));
    for (std::size_t k = 0; k < samples.size(); ++k)
      data.samples[i].push_back(
          {std::move(samples[k]), l.at("samples").at(k).get<bool>()});
    for (std::size_t k = 0; k < queries.size(); ++k)
      data.queries[i].push_back(
          {std::move(queries[k]), l.at("queries").at(k).get<bool>()});
  }
  return data;
}

namespace {

struct RowKey {
  std::string criterion;
  double tau;
  int n;
  bool operator<(const RowKey& o) const {
    return std::tie(criterion, tau, n) < std::tie(o.criterion, o.tau, o.n);
  }
};

struct RowTally {
  double purity_sum = 0.0;
  int purity_count = 0;
  int direct_true = 0, direct_total = 0;
  int tp = 0, fp = 0, fn = 0;
};

// All per-task distance work shares this cache, keyed by trajectory ids so
// parallel scheduling cannot change any value.
struct TaskContext {
  const BenchmarkTask& task;
  const std::vector<LabeledTrajectory>& samples;
  const std::vector<LabeledTrajectory>& queries;
  std::array<DistanceMatrix, kNumGroups> matrices;
  std::vector<double> membership;  // distance of each sample to the gt family
  std::map<std::pair<std::string, WarpGroup>, std::vector<double>> verify_cache;

  TaskContext(const BenchmarkTask& t, const std::vector<LabeledTrajectory>& s,
              const std::vector<LabeledTrajectory>& q)
      : task(t), samples(s), queries(q) {}
};

DistanceMatrix submatrix(const DistanceMatrix& m, int n) {
  DistanceMatrix out;
  out.labels.assign(m.labels.begin(), m.labels.begin() + n);
  out.values = m.values.topLeftCorner(n, n);
  return out;
}

}  // namespace

BenchReport evaluate_benchmark(const BenchmarkData& data, const BenchConfig& cfg) {
  BenchReport report;
  report.config = bench_config_to_json(cfg);
  report.per_task = json::object();

  std::vector<CriterionSpec> criteria;
  for (const auto& name : cfg.criteria) criteria.push_back(*CriterionSpec::parse(name));

  std::vector<double> taus = {cfg.tau};
  for (const double t : cfg.tau_sweep)
    if (std::find(taus.begin(), taus.end(), t) == taus.end()) taus.push_back(t);
  std::vector<int> ns = {cfg.n_samples};
  for (const int n : cfg.n_sweep)
    if (std::find(ns.begin(), ns.end(), n) == ns.end()) ns.push_back(n);

  IcpConfig icp = cfg.icp;
  icp.early_stop_tau = min_tau(cfg);

  std::map<RowKey, RowTally> tallies;

  for (std::size_t ti = 0; ti < data.tasks.size(); ++ti) {
    const BenchmarkTask& task = data.tasks[ti];
    try {
      TaskContext ctx(task, data.samples[ti], data.queries[ti]);
      std::vector<Trajectory> trajs;
      for (const auto& s : ctx.samples) trajs.push_back(s.trajectory);
      const int n_max = static_cast<int>(trajs.size());

      for (const WarpGroup g : all_groups()) {
        IcpConfig mat_cfg = icp;
        mat_cfg.rng_seed = cfg.seed;
        ctx.matrices[static_cast<int>(g)] = pairwise_matrix(trajs, g, mat_cfg);
      }

      ctx.membership.resize(trajs.size());
      parallel_for(trajs.size(), [&](std::size_t i) {
        IcpConfig m_cfg = icp;
        m_cfg.rng_seed = derive_seed(cfg.seed, task.prototype.id, trajs[i].id);
        ctx.membership[i] =
            distance(task.prototype, trajs[i], task.group, m_cfg).distance;
      });

      // Recover families for every (criterion, tau, n) cell up front, then
      // batch the verification distances they need.
      struct Cell {
        RowKey key;
        std::vector<ShapeFamily> families;
      };
      std::vector<Cell> cells;
      json task_audit = json::object();
      for (const double tau : taus) {
        for (const int n : ns) {
          if (n > n_max) continue;
          HierarchyClusterings hc;
          hc.tau = tau;
          for (const WarpGroup g : all_groups()) {
            GroupClustering& gc = hc.at(g);
            gc.matrix = submatrix(ctx.matrices[static_cast<int>(g)], n);
            gc.labeling = dbscan(gc.matrix, tau);
          }
          std::vector<Trajectory> prefix(trajs.begin(), trajs.begin() + n);

          auto add_cell = [&](const std::string& name, const CriterionSpec& spec) {
            const CriterionOutcome outcome = apply_criterion(spec, hc);
            Cell cell{{name, tau, n},
                      families_from_outcome(outcome, hc, prefix)};
            if (tau == cfg.tau && n == cfg.n_samples)
              task_audit[name] = {
                  {"chosen_group", group_name(outcome.chosen_group)},
                  {"clusters", outcome.chosen_clusters.size()}};
            cells.push_back(std::move(cell));
          };
          for (const auto& spec : criteria) add_cell(spec.name(), spec);
          if (cfg.include_oracle) {
            CriterionSpec oracle;
            oracle.kind = CriterionSpec::Oracle;
            oracle.oracle_group = task.group;
            add_cell("oracle", oracle);
          }
        }
      }

      // Distinct (prototype, group) pairs across cells.
      std::vector<std::pair<std::string, WarpGroup>> jobs;
      for (const auto& cell : cells)
        for (const auto& f : cell.families) {
          const auto key = std::make_pair(f.prototype.id, f.group);
          if (!ctx.verify_cache.count(key)) {
            ctx.verify_cache[key] = {};
            jobs.push_back(key);
          }
        }
      std::vector<std::vector<double>> job_result(jobs.size());
      parallel_for(jobs.size(), [&](std::size_t j) {
        const auto& [proto_id, group] = jobs[j];
        const Trajectory* proto = nullptr;
        for (const auto& s : ctx.samples)
          if (s.trajectory.id == proto_id) proto = &s.trajectory;
        std::vector<double> dists(ctx.queries.size());
        for (std::size_t q = 0; q < ctx.queries.size(); ++q) {
          IcpConfig v_cfg = icp;
          v_cfg.rng_seed =
              derive_seed(cfg.seed, proto_id, ctx.queries[q].trajectory.id);
          dists[q] = distance(*proto, ctx.queries[q].trajectory, group, v_cfg)
                         .distance;
        }
        job_result[j] = std::move(dists);
      });
      for (std::size_t j = 0; j < jobs.size(); ++j)
        ctx.verify_cache[jobs[j]] = std::move(job_result[j]);

      // Tally every cell.
      for (const auto& cell : cells) {
        RowTally& tally = tallies[cell.key];
        const double tau = cell.key.tau;
        const int n = cell.key.n;

        std::set<std::string> chosen_ids;
        for (const auto& f : cell.families)
          chosen_ids.insert(f.support.begin(), f.support.end());
        int chosen = 0, chosen_true = 0;
        for (int i = 0; i < n; ++i) {
          const bool member = ctx.membership[i] <= tau;
          ++tally.direct_total;
          if (member) ++tally.direct_true;
          if (chosen_ids.count(trajs[i].id)) {
            ++chosen;
            if (member) ++chosen_true;
          }
        }
        tally.purity_sum +=
            chosen > 0 ? static_cast<double>(chosen_true) / chosen : 0.0;
        tally.purity_count += 1;

        for (std::size_t q = 0; q < ctx.queries.size(); ++q) {
          bool predicted = false;
          for (const auto& f : cell.families) {
            const auto& dists =
                ctx.verify_cache.at(std::make_pair(f.prototype.id, f.group));
            if (dists[q] <= tau) {
              predicted = true;
              break;
            }
          }
          const bool truth = ctx.queries[q].truth;
          if (predicted && truth) ++tally.tp;
          else if (predicted && !truth) ++tally.fp;
          else if (!predicted && truth) ++tally.fn;
        }
      }
      report.per_task[task.id] = std::move(task_audit);
    } catch (const Error& e) {
      report.failed_tasks.push_back(task.id + ": " + e.what());
    }
  }

  for (const auto& [key, tally] : tallies) {
    ReportRow row;
    row.criterion = key.criterion;
    row.tau = key.tau;
    row.n_samples = key.n;
    row.accuracy =
        tally.purity_count > 0 ? tally.purity_sum / tally.purity_count : 0.0;
    row.direct_accuracy =
        tally.direct_total > 0
            ? static_cast<double>(tally.direct_true) / tally.direct_total
            : 0.0;
    row.precision = tally.tp + tally.fp > 0
                        ? static_cast<double>(tally.tp) / (tally.tp + tally.fp)
                        : 0.0;
    row.recall = tally.tp + tally.fn > 0
                     ? static_cast<double>(tally.tp) / (tally.tp + tally.fn)
                     : 0.0;
    row.f1 = row.precision + row.recall > 0.0
                 ? 2.0 * row.precision * row.recall / (row.precision + row.recall)
                 : 0.0;
    report.rows.push_back(std::move(row));
  }
  return report;
}

json report_to_json(const BenchReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"criterion", r.criterion},
                    {"tau", r.tau},
                    {"n_samples", r.n_samples},
                    {"accuracy", r.accuracy},
                    {"direct_accuracy", r.direct_accuracy},
                    {"precision", r.precision},
                    {"recall", r.recall},
                    {"f1", r.f1}});
  return {{"config", report.config},
          {"rows", std::move(rows)},
          {"per_task", report.per_task},
          {"failed_tasks", report.failed_tasks}};
}

std::string report_table(const BenchReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(20) << "criterion" << std::right << std::setw(7)
      << "tau" << std::setw(5) << "N" << std::setw(10) << "accuracy"
      << std::setw(10) << "prec" << std::setw(10) << "recall" << std::setw(10)
      << "f1" << '\n';
  out << std::string(72, '-') << '\n';
  bool direct_done = false;
  for (const auto& r : report.rows) {
    if (!direct_done) {
      out << std::left << std::setw(20) << "llm-direct" << std::right
          << std::setw(7) << r.tau << std::setw(5) << r.n_samples
          << std::setw(10) << std::fixed << std::setprecision(3)
          << r.direct_accuracy << std::setw(10) << "-" << std::setw(10) << "-"
          << std::setw(10) << "-" << '\n';
      direct_done = true;
    }
    out << std::left << std::setw(20) << r.criterion << std::right
        << std::setw(7) << std::setprecision(2) << r.tau << std::setw(5)
        << r.n_samples << std::setw(10) << std::setprecision(3) << r.accuracy
        << std::setw(10) << r.precision << std::setw(10) << r.recall
        << std::setw(10) << r.f1 << '\n';
  }
  if (!report.failed_tasks.empty()) {
    out << "failed tasks:\n";
    for (const auto& f : report.failed_tasks) out << "  " << f << '\n';
  }
  return out.str();
}

}  // namespace trajsc::bench
