#pragma once

#include <Eigen/Core>

#include "trajsc/warp_group.hpp"

namespace trajsc {

using Matrix23d = Eigen::Matrix<double, 2, 3>;

/// A planar transform as the 2×3 augmented matrix [A | t] acting on column
/// points, tagged with the group it was estimated under. The linear part A
/// must stay invertible (|det| > 1e-9).
struct Transform {
  Matrix23d matrix = Matrix23d::Zero();
  WarpGroup group = WarpGroup::Affine;

  Eigen::Matrix2d linear() const { return matrix.leftCols<2>(); }
  Eigen::Vector2d translation() const { return matrix.col(2); }

  static Transform identity(WarpGroup g) {
    Transform w;
    w.matrix << 1, 0, 0, 0, 1, 0;
    w.group = g;
    return w;
  }

  static Transform from_parts(const Eigen::Matrix2d& linear,
                              const Eigen::Vector2d& translation, WarpGroup g) {
    Transform w;
    w.matrix.leftCols<2>() = linear;
    w.matrix.col(2) = translation;
    w.group = g;
    return w;
  }
};

/// Builders for common warps (group tag = tightest containing group).
Transform make_rotation(double radians);
Transform make_translation(double tx, double ty);
Transform make_similarity(double scale, double radians, double tx, double ty,
                          bool reflect = false);
Transform make_anisotropic(double sx, double sy, double radians, double tx,
                           double ty, bool scale_after_rotation = false);
Transform make_shear(double k);

/// Maps 2×N column points through the transform.
Eigen::Matrix2Xd apply_points(const Transform& w,
                              const Eigen::Ref<const Eigen::Matrix2Xd>& pts);

/// Composition so that apply(compose(w2, w1), p) == apply(w2, apply(w1, p)).
Transform compose(const Transform& w2, const Transform& w1);

Transform inverse(const Transform& w);

/// Checks the matrix against the constraints of `g` by decomposition,
/// e.g. orthonormal linear part with det +1 for Rigid, orthogonal columns
/// or rows for SimAni (negative scales permitted), invertibility for Affine.
bool satisfies_group(const Transform& w, WarpGroup g, double tol = 1e-6);

}  // namespace trajsc
