#pragma once

#include <cstdint>
#include <vector>

#include "trajsc/bench/tasks.hpp"
#include "trajsc/icp.hpp"
#include "trajsc/random.hpp"

namespace trajsc::bench {

enum class DistractorMode { OtherShape, OutOfGroupWarp, Mixed };

/// Sampling ranges for the in-group warps of true samples and the
/// magnitudes of out-of-group distractor warps. Out-of-group magnitudes
/// start well above τ-scale so distractors land far outside the family.
struct WarpRanges {
  double rot_lo = 0.0, rot_hi = 2.0 * M_PI;
  double scale_lo = 0.5, scale_hi = 2.0;  // log-uniform
  double aniso_lo = 0.5, aniso_hi = 2.0;  // log-uniform, per axis
  double trans_lo = -80.0, trans_hi = 80.0;
  double shear_lo = -0.5, shear_hi = 0.5;       // affine-family shear
  double out_stretch_lo = 1.4, out_stretch_hi = 1.9;
  double out_shear_lo = 0.4, out_shear_hi = 0.7;
};

struct SamplerConfig {
  int n_samples = 19;
  double correct_rate = 0.7;
  WarpRanges warp_ranges;
  DistractorMode distractor_mode = DistractorMode::OtherShape;
  double noise_px = 0.0;
  std::uint64_t rng_seed = 0;
  int max_attempts = 1000;  // rejection-sampling cap per verification set
  // Cycle per-task diversity (how often warp parameters collapse to their
  // canonical values) the way repeated LLM sampling collapses to default
  // sizes and orientations; false turns collapse off entirely.
  bool vary_diversity = true;
};

struct LabeledTrajectory {
  Trajectory trajectory;
  bool truth = false;
};

/// A random element of the task's ground-truth group applied to the
/// prototype. Anisotropic warps scale in the canonical frame before
/// rotating; `force_axis_aligned` pins the rotation to zero for the
/// canonical-orientation instances anisotropic families require.
Transform draw_in_group_warp(const BenchmarkTask& task, const SamplerConfig& cfg,
                             Rng& rng, bool force_axis_aligned);

/// Emits n_samples labeled trajectories: with probability correct_rate a
/// random in-group warp of the prototype (for anisotropic families every
/// third true sample is axis-aligned), otherwise a distractor per
/// distractor_mode. Optional per-point Gaussian jitter. Deterministic
/// given rng_seed.
std::vector<LabeledTrajectory> sample_task(const BenchmarkTask& task,
                                           const SamplerConfig& cfg);

/// Rejection-samples candidates until 5 true and 5 false queries exist,
/// labeling by a ground-truth membership check (distance to the prototype
/// under the ground-truth group at threshold tau); candidates whose check
/// disagrees with their construction are redrawn. False queries cycle
/// through distractor kinds, including out-of-group warps one and two
/// hierarchy levels up, to probe the membership boundary.
/// Throws SamplerExhausted after cfg.max_attempts candidates.
std::vector<LabeledTrajectory> build_verification_set(const BenchmarkTask& task,
                                                      const SamplerConfig& cfg,
                                                      double tau,
                                                      const IcpConfig& icp_cfg);

}  // namespace trajsc::bench
