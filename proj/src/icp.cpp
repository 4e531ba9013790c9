#include "trajsc/icp.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "trajsc/errors.hpp"
#include "trajsc/estimation.hpp"
#include "trajsc/parallel.hpp"
#include "trajsc/random.hpp"

namespace trajsc {

namespace {

// Coarser anisotropic search for the inner loop; the 3-point objective's
// basins span tens of degrees, and sub-pixel alignment needs far less than
// the public estimator's machine-level angular precision.
constexpr AnisoOptions kIcpAniso{90, 1e-6};

struct Workspace {
  Eigen::Matrix2Xd target_res;   // 2×n, resampled once
  Eigen::Matrix2Xd r_trans;      // 2×n, current correspondences
  Eigen::Matrix2Xd transformed;  // 2×m scratch
  Eigen::Matrix2Xd source_res;   // 2×n, fresh resample of the source
  Eigen::VectorXd cumlen;
  CorrespondenceSet corr;

  Workspace() {
    corr.source.resize(2, 3);
    corr.target.resize(2, 3);
  }
};

double mean_point_distance(const Eigen::Matrix2Xd& a, const Eigen::Matrix2Xd& b) {
  return (a - b).colwise().norm().sum() / static_cast<double>(a.cols());
}

// Draws 3 distinct indices whose triangles are non-degenerate in both the
// source and target resamplings; redraws up to 100 times.
bool draw_triple(Rng& rng, int n, const Eigen::Matrix2Xd& src,
                 const Eigen::Matrix2Xd& tgt, int idx[3]) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    idx[0] = static_cast<int>(rng.uniform_index(n));
    do {
      idx[1] = static_cast<int>(rng.uniform_index(n));
    } while (idx[1] == idx[0]);
    do {
      idx[2] = static_cast<int>(rng.uniform_index(n));
    } while (idx[2] == idx[0] || idx[2] == idx[1]);
    const double a_src = triangle_area2(src.col(idx[0]), src.col(idx[1]), src.col(idx[2]));
    const double a_tgt = triangle_area2(tgt.col(idx[0]), tgt.col(idx[1]), tgt.col(idx[2]));
    if (std::abs(a_src) > 2e-6 && std::abs(a_tgt) > 2e-6) return true;
  }
  return false;
}

// One full run of the generalized ICP against an already-resampled target.
DistanceResult icp_core(const Eigen::Matrix2Xd& source_pts, WarpGroup group,
                        const IcpConfig& cfg, Workspace& ws) {
  const int n = cfg.n_resample;
  Rng rng(cfg.rng_seed);
  resample_points(source_pts, n, ws.source_res, ws.cumlen);

  DistanceResult best;
  best.distance = std::numeric_limits<double>::infinity();
  best.transform = Transform::identity(group);

  int idx[3];
  for (int outer = 0; outer < cfg.outer_iters; ++outer) {
    if (!draw_triple(rng, n, ws.source_res, ws.target_res, idx)) continue;
    ws.r_trans = ws.source_res;

    double d_prev = std::numeric_limits<double>::infinity();
    double d_avg = std::numeric_limits<double>::infinity();
    Transform a = Transform::identity(group);
    bool have = false;
    for (int inner = 0; inner < cfg.inner_iters; ++inner) {
      for (int k = 0; k < 3; ++k) {
        ws.corr.source.col(k) = ws.r_trans.col(idx[k]);
        ws.corr.target.col(k) = ws.target_res.col(idx[k]);
      }
      try {
        a = estimate_for_group(ws.corr, group, kIcpAniso);
      } catch (const DegenerateCorrespondences&) {
        break;  // correspondences crawled into a degenerate spot
      }
      ws.transformed.noalias() = a.linear() * source_pts;
      ws.transformed.colwise() += a.translation();
      resample_points(ws.transformed, n, ws.r_trans, ws.cumlen);
      d_avg = mean_point_distance(ws.r_trans, ws.target_res);
      have = true;
      if (std::abs(d_avg - d_prev) < cfg.inner_eps) break;
      d_prev = d_avg;
      // Undo the estimate so the next one restarts from nudged source points.
      const Transform inv = inverse(a);
      ws.r_trans = (inv.linear() * ws.r_trans).colwise() + inv.translation();
    }

    if (have && d_avg < best.distance) {
      best.distance = d_avg;
      best.transform = a;
    }
    if (have && d_avg < cfg.early_stop_tau) break;
  }

  if (!std::isfinite(best.distance)) {
    // Every restart was skipped (e.g. near-degenerate geometry); fall back
    // to the raw index-matched distance under the identity transform.
    best.distance = mean_point_distance(ws.source_res, ws.target_res);
    best.transform = Transform::identity(group);
  }
  return best;
}

DistanceResult closed_search(const Trajectory& source_norm, WarpGroup group,
                             const IcpConfig& cfg, Workspace& ws) {
  const int n = cfg.n_resample;
  const int step = cfg.start_coarse_step;

  IcpConfig screen_cfg = cfg;
  screen_cfg.outer_iters = std::min(cfg.outer_iters, cfg.closed_screen_iters);

  DistanceResult best;
  best.distance = std::numeric_limits<double>::infinity();
  std::vector<bool> tried(n, false);

  auto eval = [&](int offset) {
    offset = ((offset % n) + n) % n;
    if (tried[offset] || best.distance < cfg.early_stop_tau) return;
    tried[offset] = true;
    const Trajectory rotated = rotate_start(source_norm, offset, n);
    DistanceResult r = icp_core(rotated.points, group, screen_cfg, ws);
    if (r.distance < best.distance) {
      best = r;
      best.start_offset = offset;
    }
  };

  for (int k = 0; k < n; k += step) eval(k);
  const int center = best.start_offset;
  for (int j = center - cfg.start_refine_radius;
       j <= center + cfg.start_refine_radius; ++j)
    eval(j);

  // Full-budget pass at the winning offset. The screening run is the prefix
  // of this one (same seed), so the result can only improve.
  const Trajectory rotated = rotate_start(source_norm, best.start_offset, n);
  DistanceResult r = icp_core(rotated.points, group, cfg, ws);
  r.start_offset = best.start_offset;
  return r;
}

}  // namespace

DistanceResult icp_distance(const Trajectory& source, const Trajectory& target,
                            WarpGroup group, const IcpConfig& cfg) {
  const Trajectory s = normalize(source);
  const Trajectory t = normalize(target);
  Workspace ws;
  resample_points(t.points, cfg.n_resample, ws.target_res, ws.cumlen);
  return icp_core(s.points, group, cfg, ws);
}

DistanceResult icp_distance_closed(const Trajectory& source,
                                   const Trajectory& target, WarpGroup group,
                                   const IcpConfig& cfg) {
  const Trajectory s = normalize(source);
  const Trajectory t = normalize(target);
  Workspace ws;
  resample_points(t.points, cfg.n_resample, ws.target_res, ws.cumlen);
  return closed_search(s, group, cfg, ws);
}

DistanceResult distance(const Trajectory& t1, const Trajectory& t2,
                        WarpGroup group, const IcpConfig& cfg) {
  const Trajectory a = normalize(t1);
  const Trajectory b = normalize(t2);
  Workspace ws;

  resample_points(b.points, cfg.n_resample, ws.target_res, ws.cumlen);
  DistanceResult fwd = is_closed(a) ? closed_search(a, group, cfg, ws)
                                    : icp_core(a.points, group, cfg, ws);

  resample_points(a.points, cfg.n_resample, ws.target_res, ws.cumlen);
  DistanceResult rev = is_closed(b) ? closed_search(b, group, cfg, ws)
                                    : icp_core(b.points, group, cfg, ws);

  return fwd.distance <= rev.distance ? fwd : rev;
}

DistanceMatrix pairwise_matrix(const std::vector<Trajectory>& ts,
                               WarpGroup group, const IcpConfig& cfg) {
  const std::size_t n = ts.size();
  if (n < 2) throw Error("pairwise_matrix needs at least 2 trajectories");

  DistanceMatrix d;
  d.labels.reserve(n);
  for (const auto& t : ts) d.labels.push_back(t.id);
  d.values = Eigen::MatrixXd::Zero(n, n);

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  parallel_for(pairs.size(), [&](std::size_t p) {
    const auto [i, j] = pairs[p];
    IcpConfig pair_cfg = cfg;
    pair_cfg.rng_seed = derive_seed(cfg.rng_seed, d.labels[i], d.labels[j]);
    try {
      const double v = distance(ts[i], ts[j], group, pair_cfg).distance;
      d.values(i, j) = v;
      d.values(j, i) = v;
    } catch (const Error& e) {
      throw Error("distance failed for pair ('" + d.labels[i] + "', '" +
                  d.labels[j] + "'): " + e.what());
    }
  });
  return d;
}

}  // namespace trajsc
