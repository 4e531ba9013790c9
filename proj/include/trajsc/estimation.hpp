#pragma once

#include <Eigen/Core>

#include "trajsc/transform.hpp"

namespace trajsc {

/// Paired source/target points for transform estimation. Lengths must be
/// equal and at least 3; the source must not be collinear when used for
/// affine or anisotropic estimation.
struct CorrespondenceSet {
  Eigen::Matrix2Xd source;
  Eigen::Matrix2Xd target;
};

/// Mean Euclidean point-to-point error of w applied to the correspondences.
double residual(const Transform& w, const CorrespondenceSet& c);

/// Signed twice-the-area of the triangle spanned by three points; a
/// magnitude at or below 2e-6 marks the triple collinear (area ≤ 1e-6).
double triangle_area2(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                      const Eigen::Vector2d& c);

/// Least-squares rotation + translation (Kabsch-Umeyama). With
/// allow_reflection the det = ±1 candidates are both evaluated and the
/// lower-residual one wins; otherwise the linear part has det +1.
/// Throws DegenerateCorrespondences when the source covariance is rank 0.
Transform estimate_rigid(const CorrespondenceSet& c, bool allow_reflection);

/// Umeyama closed form with uniform scale s > 0; reflection branch as in
/// estimate_rigid.
Transform estimate_similarity(const CorrespondenceSet& c, bool allow_reflection);

/// Least-squares 6-parameter affine map (exact for 3 points).
/// Throws DegenerateCorrespondences on a collinear source.
Transform estimate_affine(const CorrespondenceSet& c);

/// Search density for the anisotropic estimator. The defaults recover
/// exact-model parameters to sub-1e-6 residuals; the ICP inner loop passes
/// a coarser setting (the 3-point objective holds only low-order harmonics
/// in θ, so its basins span tens of degrees).
struct AnisoOptions {
  int grid_samples = 360;
  double golden_tol = 1e-12;  // radians
};

/// Rotation + per-axis scale + translation, no shear. Tests both
/// decomposition orders A = R(θ)·S and A = S·R(θ) with S = diag(sx, sy):
/// for each order sweeps θ over a uniform grid on [0, 2π), solving
/// sx, sy, tx, ty by linear least squares at each θ, then refines the best
/// θ by golden-section search; the lower-residual order wins. Negative
/// scales are permitted (they subsume reflections).
Transform estimate_anisotropic(const CorrespondenceSet& c,
                               const AnisoOptions& opts = {});

/// Dispatches to the estimator matching the group.
Transform estimate_for_group(const CorrespondenceSet& c, WarpGroup g,
                             const AnisoOptions& aniso = {});

}  // namespace trajsc
