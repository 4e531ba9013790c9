#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "trajsc/bench/tasks.hpp"
#include "trajsc/criteria.hpp"
#include "trajsc/pipeline.hpp"

namespace trajsc::io {

using nlohmann::json;

// Trajectory: {"id": "...", "points": [[x, y], ...]}. Collections are JSON
// arrays of such objects; the canonical file extension is .traj.json.
json to_json(const Trajectory& t);
Trajectory trajectory_from_json(const json& j);

json to_json(const Transform& w);
Transform transform_from_json(const json& j);

// DistanceMatrix: {"labels": [...], "values": [[...], ...]}.
json to_json(const DistanceMatrix& d);
DistanceMatrix matrix_from_json(const json& j);
std::string matrix_to_csv(const DistanceMatrix& d);

// ClusterLabeling: {"labels": {id: cluster}, "largest": cluster}.
json labeling_to_json(const ClusterLabeling& labeling,
                      const std::vector<std::string>& ids);

json to_json(const CriterionOutcome& outcome,
             const std::vector<std::string>& ids);

// ShapeFamily embeds its prototype trajectory.
json to_json(const ShapeFamily& f);
ShapeFamily family_from_json(const json& j);

json to_json(const VerificationVerdict& v);

json to_json(const EvalReport& r);

json to_json(const bench::BenchmarkTask& t);
bench::BenchmarkTask task_from_json(const json& j);

json config_to_json(const IcpConfig& cfg);
IcpConfig icp_config_from_json(const json& j);

/// Parses a file as either one trajectory object or an array of them.
std::vector<Trajectory> load_trajectories(const std::filesystem::path& path);
Trajectory load_trajectory(const std::filesystem::path& path);
void save_json(const std::filesystem::path& path, const json& j);
json load_json(const std::filesystem::path& path);

}  // namespace trajsc::io
