// Command-line surface for the trajectory self-consistency toolkit.
// JSON goes to stdout; diagnostics go to stderr. Exit codes: 0 success
// (for `verify`: matched), 1 verify mismatch, 2 parse/config error,
// 3 degenerate trajectory.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>

#include "trajsc/bench/eval.hpp"
#include "trajsc/errors.hpp"
#include "trajsc/io/json_io.hpp"
#include "trajsc/io/svg.hpp"
#include "trajsc/pipeline.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace trajsc;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitParse = 2;
constexpr int kExitDegenerate = 3;

struct GlobalArgs {
  double tau = 0.5;
  std::uint64_t seed = 0;
  int n_resample = 100;
  std::string group = "sim-ref";
  std::string criterion;
};

IcpConfig make_icp(const GlobalArgs& g) {
  IcpConfig cfg;
  cfg.n_resample = g.n_resample;
  cfg.early_stop_tau = g.tau;
  cfg.rng_seed = g.seed;
  return cfg;
}

WarpGroup parse_group_or_throw(const std::string& name) {
  const auto g = parse_group(name);
  if (!g) throw ParseError("unknown group: " + name);
  return *g;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << text;
}

int cmd_distance(const GlobalArgs& g, const std::string& file_a,
                 const std::string& file_b) {
  const Trajectory a = io::load_trajectory(file_a);
  const Trajectory b = io::load_trajectory(file_b);
  const DistanceResult r = distance(a, b, parse_group_or_throw(g.group), make_icp(g));
  json out = {{"distance", r.distance},
              {"transform", io::to_json(r.transform)},
              {"start_offset", r.start_offset}};
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_cluster(const GlobalArgs& g, const std::string& file,
                const std::string& render_path, const std::string& family_out,
                int render_resample) {
  const std::vector<Trajectory> ts = io::load_trajectories(file);
  if (ts.size() < 2) throw ParseError("need at least 2 trajectories");
  const IcpConfig cfg = make_icp(g);

  std::vector<std::string> ids;
  for (const auto& t : ts) ids.push_back(t.id);

  json out;
  ClusterLabeling labeling;
  std::vector<int> highlighted;

  if (!g.criterion.empty()) {
    const auto spec = CriterionSpec::parse(g.criterion);
    if (!spec) throw ParseError("unknown criterion: " + g.criterion);
    const HierarchyClusterings hc =
        spec->kind == CriterionSpec::Oracle
            ? [&] {
                HierarchyClusterings h;
                h.tau = g.tau;
                auto& gc = h.at(spec->oracle_group);
                gc.matrix = pairwise_matrix(ts, spec->oracle_group, cfg);
                gc.labeling = dbscan(gc.matrix, g.tau);
                return h;
              }()
            : compute_hierarchy_clusterings(ts, g.tau, cfg);
    const CriterionOutcome outcome = apply_criterion(*spec, hc);
    out = io::to_json(outcome, ids);
    labeling = hc.at(outcome.chosen_group).labeling;
    for (const auto& cluster : outcome.chosen_clusters)
      highlighted.push_back(labeling.labels[cluster.front()]);
    if (!family_out.empty()) {
      const auto families = families_from_outcome(outcome, hc, ts);
      json fams = json::array();
      for (const auto& f : families) fams.push_back(io::to_json(f));
      io::save_json(family_out, families.size() == 1 ? io::to_json(families[0])
                                                     : fams);
    }
  } else {
    const WarpGroup group = parse_group_or_throw(g.group);
    const DistanceMatrix d = pairwise_matrix(ts, group, cfg);
    labeling = dbscan(d, g.tau);
    highlighted.push_back(labeling.largest_id);
    out = io::labeling_to_json(labeling, ids);
    if (!family_out.empty()) {
      HierarchyClusterings hc;
      hc.tau = g.tau;
      hc.at(group) = {d, labeling};
      CriterionSpec spec;
      spec.kind = CriterionSpec::Oracle;
      spec.oracle_group = group;
      const auto families =
          families_from_outcome(apply_criterion(spec, hc), hc, ts);
      io::save_json(family_out, io::to_json(families[0]));
    }
  }

  if (!render_path.empty()) {
    io::RenderOptions opts;
    opts.resample = render_resample;
    write_text(render_path, io::render_clusters_svg(ts, labeling, highlighted, opts));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

int cmd_verify(const GlobalArgs& g, const std::string& family_file,
               const std::string& query_file) {
  const json fj = io::load_json(family_file);
  std::vector<ShapeFamily> families;
  if (fj.is_array())
    for (const auto& f : fj) families.push_back(io::family_from_json(f));
  else
    families.push_back(io::family_from_json(fj));

  const Trajectory query = io::load_trajectory(query_file);
  const VerificationVerdict v = verify_any(families, query, make_icp(g));
  std::cout << io::to_json(v).dump(2) << '\n';
  return v.matched ? 0 : kExitMismatch;
}

int cmd_render(const GlobalArgs& g, const std::string& file,
               const std::string& out_path, int render_resample) {
  (void)g;
  const std::vector<Trajectory> ts = io::load_trajectories(file);
  io::RenderOptions opts;
  opts.resample = render_resample;
  write_text(out_path, io::render_trajectories_svg(ts, opts));
  std::cerr << "wrote " << out_path << " (" << ts.size() << " trajectories)\n";
  return 0;
}

bench::BenchConfig load_bench_config(const GlobalArgs& g,
                                     const std::string& config_file) {
  bench::BenchConfig cfg;
  if (!config_file.empty()) cfg = bench::bench_config_from_json(io::load_json(config_file));
  else {
    cfg.tau = g.tau;
    cfg.seed = g.seed;
  }
  cfg.icp.n_resample = g.n_resample;
  return cfg;
}

int cmd_bench_generate(const GlobalArgs& g, const std::string& config_file,
                       const std::string& out_dir) {
  const bench::BenchConfig cfg = load_bench_config(g, config_file);
  const bench::BenchmarkData data = bench::generate_benchmark(cfg);
  bench::save_benchmark(data, out_dir);
  io::save_json(fs::path(out_dir) / "config.json", bench::bench_config_to_json(cfg));
  std::cerr << "wrote benchmark with " << data.tasks.size() << " tasks to "
            << out_dir << '\n';
  return 0;
}

int cmd_bench_eval(const GlobalArgs& g, const std::string& config_file,
                   const std::string& bench_dir, const std::string& report_file,
                   bool table, const std::string& tau_sweep) {
  bench::BenchConfig cfg = load_bench_config(g, config_file);
  if (config_file.empty() && fs::exists(fs::path(bench_dir) / "config.json"))
    cfg = bench::bench_config_from_json(io::load_json(fs::path(bench_dir) / "config.json"));
  if (!tau_sweep.empty()) {
    cfg.tau_sweep.clear();
    std::istringstream in(tau_sweep);
    std::string tok;
    while (std::getline(in, tok, ',')) cfg.tau_sweep.push_back(std::stod(tok));
  }

  const bench::BenchmarkData data = bench_dir.empty()
                                        ? bench::generate_benchmark(cfg)
                                        : bench::load_benchmark(bench_dir);
  const bench::BenchReport report = bench::evaluate_benchmark(data, cfg);
  const json rj = bench::report_to_json(report);
  if (!report_file.empty()) io::save_json(report_file, rj);
  if (table)
    std::cout << bench::report_table(report);
  else
    std::cout << rj.dump(2) << '\n';
  return 0;
}

int cmd_ingest(const GlobalArgs& g, const std::string& dir,
               const std::string& out_dir) {
  (void)g;
  const fs::path manifest_path = fs::path(dir) / "manifest.json";
  const json manifest = io::load_json(manifest_path);

  json diagnostics = json::object();
  int ok_files = 0;
  fs::create_directories(out_dir);

  for (const auto& [prompt, files] : manifest.items()) {
    json collection = json::array();
    json issues = json::array();
    std::set<std::string> seen_ids;
    for (const auto& f : files) {
      const fs::path path = fs::path(dir) / f.get<std::string>();
      try {
        for (const Trajectory& raw : io::load_trajectories(path)) {
          const Trajectory t = normalize(raw);
          if (!seen_ids.insert(t.id).second)
            throw ParseError("duplicate trajectory id '" + t.id + "'");
          collection.push_back(io::to_json(t));
          ++ok_files;
        }
      } catch (const Error& e) {
        issues.push_back({{"file", path.string()}, {"error", e.what()}});
      }
    }
    io::save_json(fs::path(out_dir) / (prompt + ".traj.json"), collection);
    diagnostics[prompt] = {{"accepted", collection.size()},
                           {"issues", std::move(issues)}};
  }

  std::cout << diagnostics.dump(2) << '\n';
  return ok_files > 0 ? 0 : kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Warp-invariant trajectory distances, self-consistent "
               "clustering, and shape-family verification"};
  app.require_subcommand(1);

  GlobalArgs g;
  app.add_option("--tau", g.tau, "Clustering/verification threshold in px");
  app.add_option("--seed", g.seed, "RNG seed");
  app.add_option("--n-resample", g.n_resample, "Arc-length resample count");
  app.add_option("--group", g.group, "Warp group (rigid, rigid-ref, sim, sim-ref, sim-ani, affine)");
  app.add_option("--criterion", g.criterion,
                 "Decision criterion (majority, hierarchical, most, least, "
                 "hierarchical_multi, oracle:<group>)");

  std::string file_a, file_b, render_path, family_out, out_path;
  std::string config_file, bench_dir, report_file, tau_sweep;
  int render_resample = 0;
  bool table = false;

  auto* distance_cmd = app.add_subcommand("distance", "Warp-invariant distance between two trajectory files");
  distance_cmd->add_option("source", file_a)->required();
  distance_cmd->add_option("target", file_b)->required();

  auto* cluster_cmd = app.add_subcommand("cluster", "Cluster a trajectory collection (optionally via a decision criterion)");
  cluster_cmd->add_option("collection", file_a)->required();
  cluster_cmd->add_option("--render", render_path, "Write a cluster panel SVG");
  cluster_cmd->add_option("--family-out", family_out, "Write the recovered shape family JSON");
  cluster_cmd->add_option("--resample", render_resample, "Resample before rendering");

  auto* verify_cmd = app.add_subcommand("verify", "Check a query trajectory against a shape family");
  verify_cmd->add_option("family", file_a)->required();
  verify_cmd->add_option("query", file_b)->required();

  auto* render_cmd = app.add_subcommand("render", "Render trajectories to SVG");
  render_cmd->add_option("collection", file_a)->required();
  render_cmd->add_option("-o,--out", out_path)->required();
  render_cmd->add_option("--resample", render_resample, "Resample before rendering");

  auto* bench_cmd = app.add_subcommand("bench", "Synthetic benchmark");
  bench_cmd->require_subcommand(1);
  auto* bench_gen = bench_cmd->add_subcommand("generate", "Write a benchmark directory");
  bench_gen->add_option("--config", config_file, "Flat key-value JSON config");
  bench_gen->add_option("-o,--out", bench_dir)->required();
  auto* bench_eval = bench_cmd->add_subcommand("eval", "Evaluate criteria on a benchmark");
  bench_eval->add_option("--config", config_file);
  bench_eval->add_option("--bench", bench_dir, "Benchmark directory (generated in memory when omitted)");
  bench_eval->add_option("--report", report_file, "Write the report JSON here");
  bench_eval->add_option("--tau-sweep", tau_sweep, "Comma-separated τ values");
  bench_eval->add_flag("--table", table, "Print a human-readable table");

  auto* ingest_cmd = app.add_subcommand("ingest", "Validate external .traj.json files listed in a manifest");
  ingest_cmd->add_option("dir", file_a, "Directory with manifest.json")->required();
  ingest_cmd->add_option("-o,--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (distance_cmd->parsed()) return cmd_distance(g, file_a, file_b);
    if (cluster_cmd->parsed())
      return cmd_cluster(g, file_a, render_path, family_out, render_resample);
    if (verify_cmd->parsed()) return cmd_verify(g, file_a, file_b);
    if (render_cmd->parsed()) return cmd_render(g, file_a, out_path, render_resample);
    if (bench_gen->parsed()) return cmd_bench_generate(g, config_file, bench_dir);
    if (bench_eval->parsed())
      return cmd_bench_eval(g, config_file, bench_dir, report_file, table, tau_sweep);
    if (ingest_cmd->parsed()) return cmd_ingest(g, file_a, out_path);
  } catch (const DegenerateTrajectory& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDegenerate;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return kExitParse;
}
