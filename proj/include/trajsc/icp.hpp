#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <string>
#include <vector>

#include "trajsc/trajectory.hpp"
#include "trajsc/transform.hpp"

namespace trajsc {

/// Knobs of the ICP-based distance. Defaults follow the clustering
/// threshold τ = 0.5 px; early_stop_tau should track the τ in use.
struct IcpConfig {
  int n_resample = 100;
  int outer_iters = 50;         // random 3-point restarts
  int inner_iters = 20;         // refinement steps per restart
  double inner_eps = 1e-3;      // px; inner convergence threshold
  double early_stop_tau = 0.5;  // px; outer loop exits below this
  std::uint64_t rng_seed = 0;
  int start_coarse_step = 10;   // closed-curve start search granularity
  int start_refine_radius = 5;  // exhaustive refinement half-window
  // Restart budget while screening start offsets; the winning offset is
  // re-evaluated with the full outer_iters budget (the screening run is a
  // prefix of the rerun, so the rerun can only improve on it).
  int closed_screen_iters = 8;
};

/// Best alignment found: mean point-to-point Euclidean distance in px, the
/// transform that produced it when applied to the original source, and the
/// start re-indexing used (0 for open trajectories).
struct DistanceResult {
  double distance = 0.0;
  Transform transform = Transform::identity(WarpGroup::Rigid);
  int start_offset = 0;
};

/// Square matrix of pairwise distances, zero diagonal, symmetric.
struct DistanceMatrix {
  std::vector<std::string> labels;
  Eigen::MatrixXd values;
};

/// The W-invariant distance: resamples the target once, then repeatedly
/// draws 3 distinct non-collinear indices and refines a transform estimated
/// on those correspondences, applying each estimate to the full original
/// source, arc-length-resampling, and scoring the mean index-matched point
/// distance; estimates are undone between refinement steps so the sampled
/// correspondences crawl along the source. Non-convergence is not an
/// error: the best alignment seen is returned. Deterministic per rng_seed.
DistanceResult icp_distance(const Trajectory& source, const Trajectory& target,
                            WarpGroup group, const IcpConfig& cfg);

/// Closed trajectories may start anywhere, so this evaluates icp_distance
/// with the source start rotated by every multiple of start_coarse_step
/// (in resample-index units), then refines exhaustively within
/// ±start_refine_radius of the best coarse offset.
DistanceResult icp_distance_closed(const Trajectory& source,
                                   const Trajectory& target, WarpGroup group,
                                   const IcpConfig& cfg);

/// Symmetrized distance: runs source→target and target→source (each
/// dispatching to the closed-curve search when its source is closed) and
/// keeps the smaller, so distance(a, b) == distance(b, a) exactly.
DistanceResult distance(const Trajectory& t1, const Trajectory& t2,
                        WarpGroup group, const IcpConfig& cfg);

/// All unordered pairs via `distance`, in parallel. Each pair's RNG seed is
/// derived from (cfg.rng_seed, id_i, id_j) so results do not depend on
/// scheduling. A failing pair aborts the build with both ids named.
DistanceMatrix pairwise_matrix(const std::vector<Trajectory>& ts,
                               WarpGroup group, const IcpConfig& cfg);

}  // namespace trajsc
