#include "trajsc/io/json_io.hpp"

#include <fstream>
#include <sstream>

#include "trajsc/errors.hpp"

namespace trajsc::io {

namespace {

WarpGroup group_from_json(const json& j) {
  const auto g = parse_group(j.get<std::string>());
  if (!g) throw ParseError("unknown warp group: " + j.get<std::string>());
  return *g;
}

}  // namespace

json to_json(const Trajectory& t) {
  json pts = json::array();
  for (Eigen::Index i = 0; i < t.points.cols(); ++i)
    pts.push_back({t.points(0, i), t.points(1, i)});
  return {{"id", t.id}, {"points", std::move(pts)}};
}

Trajectory trajectory_from_json(const json& j) {
  if (!j.is_object() || !j.contains("id") || !j.contains("points"))
    throw ParseError("trajectory JSON needs 'id' and 'points'");
  Trajectory t;
  t.id = j.at("id").get<std::string>();
  const json& pts = j.at("points");
  if (!pts.is_array() || pts.size() < 2)
    throw ParseError("trajectory '" + t.id + "' needs at least 2 points");
  t.points.resize(2, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const json& p = pts[i];
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw ParseError("trajectory '" + t.id + "': point " + std::to_string(i) +
                       " is not an [x, y] pair");
    t.points(0, i) = p[0].get<double>();
    t.points(1, i) = p[1].get<double>();
  }
  return t;
}

json to_json(const Transform& w) {
  return {{"matrix",
           {{w.matrix(0, 0), w.matrix(0, 1), w.matrix(0, 2)},
            {w.matrix(1, 0), w.matrix(1, 1), w.matrix(1, 2)}}},
          {"group", group_name(w.group)}};
}

Transform transform_from_json(const json& j) {
  Transform w;
  const json& m = j.at("matrix");
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 3; ++c) w.matrix(r, c) = m.at(r).at(c).get<double>();
  w.group = group_from_json(j.at("group"));
  return w;
}

json to_json(const DistanceMatrix& d) {
  json values = json::array();
  for (Eigen::Index i = 0; i < d.values.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < d.values.cols(); ++j) row.push_back(d.values(i, j));
    values.push_back(std::move(row));
  }
  return {{"labels", d.labels}, {"values", std::move(values)}};
}

DistanceMatrix matrix_from_json(const json& j) {
  DistanceMatrix d;
  d.labels = j.at("labels").get<std::vector<std::string>>();
  const json& values = j.at("values");
  const Eigen::Index n = static_cast<Eigen::Index>(values.size());
  d.values.resize(n, n);
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c)
      d.values(r, c) = values.at(r).at(c).get<double>();
  return d;
}

std::string matrix_to_csv(const DistanceMatrix& d) {
  std::ostringstream out;
  out << "id";
  for (const auto& l : d.labels) out << ',' << l;
  out << '\n';
  for (Eigen::Index i = 0; i < d.values.rows(); ++i) {
    out << d.labels[i];
    for (Eigen::Index j = 0; j < d.values.cols(); ++j) {
      out << ',' << json(d.values(i, j)).dump();
    }
    out << '\n';
  }
  return out.str();
}

json labeling_to_json(const ClusterLabeling& labeling,
                      const std::vector<std::string>& ids) {
  json labels = json::object();
  for (std::size_t i = 0; i < labeling.labels.size(); ++i)
    labels[ids[i]] = labeling.labels[i];
  return {{"labels", std::move(labels)}, {"largest", labeling.largest_id}};
}

json to_json(const CriterionOutcome& outcome,
             const std::vector<std::string>& ids) {
  json clusters = json::array();
  for (const auto& cluster : outcome.chosen_clusters) {
    json members = json::array();
    for (const int m : cluster) members.push_back(ids[m]);
    clusters.push_back(std::move(members));
  }
  json trace = json::array();
  for (const auto& e : outcome.per_group_trace)
    trace.push_back({{"group", group_name(e.group)},
                     {"largest_cluster_size", e.largest_size},
                     {"decision", e.decision}});
  return {{"chosen_group", group_name(outcome.chosen_group)},
          {"chosen_clusters", std::move(clusters)},
          {"per_group_trace", std::move(trace)}};
}

json to_json(const ShapeFamily& f) {
  return {{"prototype", to_json(f.prototype)},
          {"group", group_name(f.group)},
          {"support", f.support},
          {"tau", f.tau}};
}

ShapeFamily family_from_json(const json& j) {
  ShapeFamily f;
  f.prototype = trajectory_from_json(j.at("prototype"));
  f.group = group_from_json(j.at("group"));
  f.support = j.at("support").get<std::vector<std::string>>();
  f.tau = j.at("tau").get<double>();
  return f;
}

json to_json(const VerificationVerdict& v) {
  return {{"matched", v.matched},
          {"distance", v.distance},
          {"group", group_name(v.group)},
          {"prototype_id", v.prototype_id},
          {"tau", v.tau}};
}

json to_json(const EvalReport& r) {
  json per_task = json::array();
  for (const auto& t : r.per_task)
    per_task.push_back({{"task", t.task_id},
                        {"chosen_group", group_name(t.chosen_group)},
                        {"purity", t.purity}});
  return {{"accuracy", r.accuracy},
          {"direct_accuracy", r.direct_accuracy},
          {"precision", r.precision},
          {"recall", r.recall},
          {"f1", r.f1},
          {"per_task", std::move(per_task)}};
}

json to_json(const bench::BenchmarkTask& t) {
  json modifiers = json::object();
  if (t.modifiers.orientation != bench::Orientation::None)
    modifiers["orientation"] =
        t.modifiers.orientation == bench::Orientation::Clockwise
            ? "clockwise"
            : "counterclockwise";
  if (t.modifiers.size != bench::SizeSpec::None)
    modifiers["size"] =
        t.modifiers.size == bench::SizeSpec::Absolute ? "absolute" : "ratio";
  if (t.periods > 0) modifiers["periods"] = t.periods;
  return {{"id", t.id},
          {"prompt", t.prompt},
          {"shape", t.shape_name},
          {"group", group_name(t.group)},
          {"modifiers", std::move(modifiers)},
          {"prototype", to_json(t.prototype)}};
}

bench::BenchmarkTask task_from_json(const json& j) {
  bench::BenchmarkTask t;
  t.id = j.at("id").get<std::string>();
  t.prompt = j.at("prompt").get<std::string>();
  t.shape_name = j.at("shape").get<std::string>();
  t.group = group_from_json(j.at("group"));
  t.prototype = trajectory_from_json(j.at("prototype"));
  const json& m = j.at("modifiers");
  if (m.contains("orientation"))
    t.modifiers.orientation = m.at("orientation") == "clockwise"
                                  ? bench::Orientation::Clockwise
                                  : bench::Orientation::CounterClockwise;
  if (m.contains("size"))
    t.modifiers.size = m.at("size") == "absolute" ? bench::SizeSpec::Absolute
                                                  : bench::SizeSpec::Ratio;
  if (m.contains("periods")) t.periods = m.at("periods").get<int>();
  return t;
}

json config_to_json(const IcpConfig& cfg) {
  return {{"n_resample", cfg.n_resample},
          {"outer_iters", cfg.outer_iters},
          {"inner_iters", cfg.inner_iters},
          {"inner_eps", cfg.inner_eps},
          {"early_stop_tau", cfg.early_stop_tau},
          {"rng_seed", cfg.rng_seed},
          {"start_coarse_step", cfg.start_coarse_step},
          {"start_refine_radius", cfg.start_refine_radius},
          {"closed_screen_iters", cfg.closed_screen_iters}};
}

IcpConfig icp_config_from_json(const json& j) {
  IcpConfig cfg;
  if (j.contains("n_resample")) cfg.n_resample = j.at("n_resample").get<int>();
  if (j.contains("outer_iters")) cfg.outer_iters = j.at("outer_iters").get<int>();
  if (j.contains("inner_iters")) cfg.inner_iters = j.at("inner_iters").get<int>();
  if (j.contains("inner_eps")) cfg.inner_eps = j.at("inner_eps").get<double>();
  if (j.contains("early_stop_tau"))
    cfg.early_stop_tau = j.at("early_stop_tau").get<double>();
  if (j.contains("rng_seed")) cfg.rng_seed = j.at("rng_seed").get<std::uint64_t>();
  if (j.contains("start_coarse_step"))
    cfg.start_coarse_step = j.at("start_coarse_step").get<int>();
  if (j.contains("start_refine_radius"))
    cfg.start_refine_radius = j.at("start_refine_radius").get<int>();
  if (j.contains("closed_screen_iters"))
    cfg.closed_screen_iters = j.at("closed_screen_iters").get<int>();
  return cfg;
}

std::vector<Trajectory> load_trajectories(const std::filesystem::path& path) {
  const json j = load_json(path);
  std::vector<Trajectory> out;
  if (j.is_array()) {
    for (const auto& item : j) out.push_back(trajectory_from_json(item));
  } else {
    out.push_back(trajectory_from_json(j));
  }
  return out;
}

Trajectory load_trajectory(const std::filesystem::path& path) {
  auto all = load_trajectories(path);
  if (all.size() != 1)
    throw ParseError(path.string() + ": expected exactly one trajectory");
  return std::move(all.front());
}

void save_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return j;
}

}  // namespace trajsc::io
