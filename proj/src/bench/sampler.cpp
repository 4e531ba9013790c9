#include "trajsc/bench/sampler.hpp"

#include <cmath>

#include "trajsc/errors.hpp"

namespace trajsc::bench {

namespace {

// How often warp parameters stick to their canonical values; indexed by the
// per-task diversity tier (0 = collapsed, 2 = diverse).
struct Diversity {
  double scale_canonical;
  double reflect;
  double aniso_canonical;
  double shear_canonical;
};

constexpr Diversity kDiversity[3] = {
    {0.90, 0.05, 0.85, 0.85},
    {0.50, 0.25, 0.40, 0.40},
    {0.10, 0.50, 0.10, 0.10},
};

const Diversity& task_diversity(const BenchmarkTask& task,
                                const SamplerConfig& cfg) {
  if (!cfg.vary_diversity) return kDiversity[2];
  return kDiversity[hash_str(0xcbf29ce484222325ULL, task.id) % 3];
}

Eigen::Vector2d draw_translation(const WarpRanges& r, Rng& rng) {
  return {rng.uniform(r.trans_lo, r.trans_hi),
          rng.uniform(r.trans_lo, r.trans_hi)};
}

Transform reflect_x() {
  return Transform::from_parts(Eigen::Vector2d(1, -1).asDiagonal(),
                               Eigen::Vector2d::Zero(), WarpGroup::RigidRef);
}

Trajectory warped(const BenchmarkTask& task, const Transform& w,
                  const std::string& id) {
  Trajectory t = apply_transform(w, task.prototype);
  t.id = id;
  return t;
}

void add_noise(Trajectory& t, double noise_px, Rng& rng) {
  if (noise_px <= 0.0) return;
  for (Eigen::Index i = 0; i < t.points.cols(); ++i) {
    t.points(0, i) += noise_px * rng.normal();
    t.points(1, i) += noise_px * rng.normal();
  }
}

// Magnitude in the out-of-group band, inverted half the time so distractors
// shrink as often as they grow.
double out_magnitude(const WarpRanges& r, Rng& rng) {
  const double m = rng.log_uniform(r.out_stretch_lo, r.out_stretch_hi);
  return rng.bernoulli(0.5) ? m : 1.0 / m;
}

enum class OutKind { NextLevel, TwoLevels };

// A warp outside the task's group. NextLevel lands in the immediately less
// restrictive family; TwoLevels escapes that one as well (where the shape
// admits it). Returns false when no in-plane warp can leave the family
// (affine tasks, conics under anisotropic similarity).
bool draw_out_of_group_warp(const BenchmarkTask& task, const SamplerConfig& cfg,
                            Rng& rng, OutKind kind, Transform* out) {
  const WarpRanges& r = cfg.warp_ranges;
  const BaseShape& shape = find_shape(task.shape_name);
  const Eigen::Vector2d t = draw_translation(r, rng);
  const Transform rot = make_rotation(rng.uniform(r.rot_lo, r.rot_hi));
  const Transform trans = make_translation(t.x(), t.y());

  auto stretch = [&] {
    const double a = rng.log_uniform(r.out_stretch_lo, r.out_stretch_hi);
    const double s = rng.log_uniform(r.scale_lo, r.scale_hi);
    return Transform::from_parts(Eigen::Vector2d(a * s, s / a).asDiagonal(),
                                 Eigen::Vector2d::Zero(), WarpGroup::SimAni);
  };
  auto shear = [&] {
    double k = rng.log_uniform(r.out_shear_lo, r.out_shear_hi);
    if (rng.bernoulli(0.5)) k = -k;
    return make_shear(k);
  };

  switch (task.group) {
    case WarpGroup::Rigid:
    case WarpGroup::RigidRef:
      if (kind == OutKind::NextLevel) {
        const double s = out_magnitude(r, rng);
        *out = compose(trans, compose(rot, make_similarity(s, 0, 0, 0)));
      } else {
        *out = compose(trans, compose(rot, stretch()));
      }
      return true;
    case WarpGroup::Sim:
      if (kind == OutKind::NextLevel) {
        const double s = rng.log_uniform(r.scale_lo, r.scale_hi);
        *out = compose(trans,
                       compose(rot, compose(make_similarity(s, 0, 0, 0), reflect_x())));
      } else {
        *out = compose(trans, compose(rot, stretch()));
      }
      return true;
    case WarpGroup::SimRef:
      if (kind == OutKind::NextLevel || shape.elliptical) {
        if (shape.elliptical && kind == OutKind::TwoLevels) return false;
        *out = compose(trans, compose(rot, stretch()));
      } else {
        // No rotation composed with the shear: specific rotation angles can
        // fold a shear back into an anisotropic-similarity form.
        *out = compose(trans, shear());
      }
      return true;
    case WarpGroup::SimAni:
      if (shape.elliptical) return false;
      *out = compose(trans, shear());
      return true;
    case WarpGroup::Affine:
      return false;
  }
  return false;
}

Trajectory draw_other_shape(const BenchmarkTask& task, const SamplerConfig& cfg,
                            Rng& rng, const std::string& id) {
  static const std::vector<BaseShape> catalog = shape_catalog();
  const BaseShape& own = find_shape(task.shape_name);
  std::vector<const BaseShape*> pool;
  for (const auto& s : catalog)
    if (s.affine_class != own.affine_class) pool.push_back(&s);

  const BaseShape& pick = *pool[rng.uniform_index(pool.size())];
  const WarpRanges& r = cfg.warp_ranges;
  const Transform w = make_similarity(rng.log_uniform(0.75, 1.35),
                                      rng.uniform(r.rot_lo, r.rot_hi),
                                      rng.uniform(-40.0, 40.0),
                                      rng.uniform(-40.0, 40.0));
  Trajectory t = apply_transform(w, pick.make());
  t.id = id;
  return t;
}

}  // namespace

Transform draw_in_group_warp(const BenchmarkTask& task, const SamplerConfig& cfg,
                             Rng& rng, bool force_axis_aligned) {
  const WarpRanges& r = cfg.warp_ranges;
  const Diversity& div = task_diversity(task, cfg);
  const double theta = force_axis_aligned ? 0.0 : rng.uniform(r.rot_lo, r.rot_hi);
  const Eigen::Vector2d t = draw_translation(r, rng);
  const Transform trans = make_translation(t.x(), t.y());
  const Transform rot = make_rotation(theta);

  const bool scale_canonical = rng.bernoulli(div.scale_canonical);
  const double s =
      scale_canonical ? 1.0 : rng.log_uniform(r.scale_lo, r.scale_hi);

  switch (task.group) {
    case WarpGroup::Rigid:
      return compose(trans, rot);
    case WarpGroup::RigidRef: {
      Transform w = rot;
      if (rng.bernoulli(div.reflect)) w = compose(w, reflect_x());
      return compose(trans, w);
    }
    case WarpGroup::Sim:
      return compose(trans, compose(rot, make_similarity(s, 0, 0, 0)));
    case WarpGroup::SimRef: {
      Transform w = compose(rot, make_similarity(s, 0, 0, 0));
      if (rng.bernoulli(div.reflect)) w = compose(w, reflect_x());
      return compose(trans, w);
    }
    case WarpGroup::SimAni: {
      double sx, sy;
      if (rng.bernoulli(div.aniso_canonical)) {
        sx = sy = s;
      } else {
        sx = rng.log_uniform(r.aniso_lo, r.aniso_hi);
        sy = rng.log_uniform(r.aniso_lo, r.aniso_hi);
      }
      // Scale in the canonical frame, then rotate.
      return compose(trans,
                     compose(rot, Transform::from_parts(
                                      Eigen::Vector2d(sx, sy).asDiagonal(),
                                      Eigen::Vector2d::Zero(), WarpGroup::SimAni)));
    }
    case WarpGroup::Affine: {
      const double sx = rng.log_uniform(r.aniso_lo, r.aniso_hi);
      const double sy = rng.log_uniform(r.aniso_lo, r.aniso_hi);
      const double k = rng.bernoulli(div.shear_canonical)
                           ? 0.0
                           : rng.uniform(r.shear_lo, r.shear_hi);
      Transform w = compose(
          make_shear(k), Transform::from_parts(
                             Eigen::Vector2d(sx, sy).asDiagonal(),
                             Eigen::Vector2d::Zero(), WarpGroup::SimAni));
      if (rng.bernoulli(div.reflect)) w = compose(w, reflect_x());
      return compose(trans, compose(rot, w));
    }
  }
  throw Error("unknown warp group");
}

std::vector<LabeledTrajectory> sample_task(const BenchmarkTask& task,
                                           const SamplerConfig& cfg) {
  Rng rng(derive_seed(cfg.rng_seed, task.id, "samples"));
  std::vector<LabeledTrajectory> out;
  out.reserve(cfg.n_samples);
  int true_count = 0;

  for (int k = 0; k < cfg.n_samples; ++k) {
    const std::string id = task.id + "--s" + std::to_string(k);
    const bool truth = rng.bernoulli(cfg.correct_rate);
    Trajectory t;
    if (truth) {
      const bool axis_aligned =
          task.group == WarpGroup::SimAni && true_count % 3 == 0;
      ++true_count;
      t = warped(task, draw_in_group_warp(task, cfg, rng, axis_aligned), id);
    } else {
      bool out_warp = false;
      if (cfg.distractor_mode == DistractorMode::OutOfGroupWarp)
        out_warp = true;
      else if (cfg.distractor_mode == DistractorMode::Mixed)
        out_warp = rng.bernoulli(0.5);
      Transform w;
      if (out_warp &&
          draw_out_of_group_warp(task, cfg, rng, OutKind::NextLevel, &w)) {
        t = warped(task, w, id);
      } else {
        t = draw_other_shape(task, cfg, rng, id);
      }
    }
    add_noise(t, cfg.noise_px, rng);
    out.push_back({std::move(t), truth});
  }
  return out;
}

std::vector<LabeledTrajectory> build_verification_set(const BenchmarkTask& task,
                                                      const SamplerConfig& cfg,
                                                      double tau,
                                                      const IcpConfig& icp_cfg) {
  Rng rng(derive_seed(cfg.rng_seed, task.id, "queries"));
  std::vector<LabeledTrajectory> trues, falses;
  int false_kind = 0;

  IcpConfig check_cfg = icp_cfg;
  check_cfg.early_stop_tau = tau;

  for (int attempt = 0; attempt < cfg.max_attempts; ++attempt) {
    if (trues.size() >= 5 && falses.size() >= 5) break;
    const std::string id = task.id + "--q" + std::to_string(attempt);
    const bool want_true = rng.bernoulli(cfg.correct_rate);
    Trajectory t;
    if (want_true) {
      const bool axis_aligned =
          task.group == WarpGroup::SimAni && rng.bernoulli(0.3);
      t = warped(task, draw_in_group_warp(task, cfg, rng, axis_aligned), id);
    } else {
      const int kind = false_kind++ % 3;
      Transform w;
      if (kind == 0 ||
          !draw_out_of_group_warp(task, cfg, rng,
                                  kind == 1 ? OutKind::NextLevel
                                            : OutKind::TwoLevels,
                                  &w)) {
        t = draw_other_shape(task, cfg, rng, id);
      } else {
        t = warped(task, w, id);
      }
    }
    add_noise(t, cfg.noise_px, rng);
    if (want_true && trues.size() >= 5) continue;
    if (!want_true && falses.size() >= 5) continue;

    check_cfg.rng_seed = derive_seed(cfg.rng_seed, task.id, id);
    const bool member =
        distance(task.prototype, t, task.group, check_cfg).distance <= tau;
    // Reject candidates whose membership check disagrees with their
    // construction; the labels below are therefore membership-verified.
    if (member != want_true) continue;
    (want_true ? trues : falses).push_back({std::move(t), want_true});
  }

  if (trues.size() < 5 || falses.size() < 5)
    throw SamplerExhausted("verification sampling for task '" + task.id +
                           "' exhausted after " +
                           std::to_string(cfg.max_attempts) + " attempts");
  std::vector<LabeledTrajectory> out;
  out.reserve(10);
  for (int i = 0; i < 5; ++i) out.push_back(std::move(trues[i]));
  for (int i = 0; i < 5; ++i) out.push_back(std::move(falses[i]));
  return out;
}

}  // namespace trajsc::bench
