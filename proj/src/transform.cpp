#include "trajsc/transform.hpp"

#include <Eigen/LU>
#include <cmath>

namespace trajsc {

namespace {

Eigen::Matrix2d rotation2(double radians) {
  const double c = std::cos(radians), s = std::sin(radians);
  Eigen::Matrix2d r;
  r << c, -s, s, c;
  return r;
}

}  // namespace

Transform make_rotation(double radians) {
  return Transform::from_parts(rotation2(radians), Eigen::Vector2d::Zero(),
                               WarpGroup::Rigid);
}

Transform make_translation(double tx, double ty) {
  return Transform::from_parts(Eigen::Matrix2d::Identity(), {tx, ty},
                               WarpGroup::Rigid);
}

Transform make_similarity(double scale, double radians, double tx, double ty,
                          bool reflect) {
  Eigen::Matrix2d l = rotation2(radians) * scale;
  if (reflect) l.col(1) = -l.col(1);  // post-compose with diag(1, -1)
  return Transform::from_parts(l, {tx, ty},
                               reflect ? WarpGroup::SimRef : WarpGroup::Sim);
}

Transform make_anisotropic(double sx, double sy, double radians, double tx,
                           double ty, bool scale_after_rotation) {
  const Eigen::Matrix2d r = rotation2(radians);
  const Eigen::Matrix2d s = Eigen::Vector2d(sx, sy).asDiagonal();
  return Transform::from_parts(scale_after_rotation ? (s * r).eval()
                                                    : (r * s).eval(),
                               {tx, ty}, WarpGroup::SimAni);
}

Transform make_shear(double k) {
  Eigen::Matrix2d l;
  l << 1, k, 0, 1;
  return Transform::from_parts(l, Eigen::Vector2d::Zero(), WarpGroup::Affine);
}

Eigen::Matrix2Xd apply_points(const Transform& w,
                              const Eigen::Ref<const Eigen::Matrix2Xd>& pts) {
  return (w.linear() * pts).colwise() + w.translation();
}

Transform compose(const Transform& w2, const Transform& w1) {
  const WarpGroup g =
      is_subgroup(w1.group, w2.group) ? w2.group
      : is_subgroup(w2.group, w1.group)
          ? w1.group
          : (is_subgroup(w1.group, WarpGroup::SimRef) &&
                     is_subgroup(w2.group, WarpGroup::SimRef)
                 ? WarpGroup::SimRef
                 : WarpGroup::Affine);
  return Transform::from_parts(w2.linear() * w1.linear(),
                               w2.linear() * w1.translation() + w2.translation(),
                               g);
}

Transform inverse(const Transform& w) {
  const Eigen::Matrix2d inv = w.linear().inverse();
  return Transform::from_parts(inv, -inv * w.translation(), w.group);
}

bool satisfies_group(const Transform& w, WarpGroup g, double tol) {
  const Eigen::Matrix2d l = w.linear();
  const double det = l.determinant();
  if (std::abs(det) <= 1e-9) return false;

  const Eigen::Matrix2d gram = l.transpose() * l;       // S^2 if l = R*S
  const Eigen::Matrix2d cogram = l * l.transpose();     // S^2 if l = S*R
  const bool cols_orthogonal = std::abs(gram(0, 1)) <= tol * gram.norm();
  const bool rows_orthogonal = std::abs(cogram(0, 1)) <= tol * cogram.norm();
  const bool uniform =
      cols_orthogonal && std::abs(gram(0, 0) - gram(1, 1)) <= tol * gram.norm();

  switch (g) {
    case WarpGroup::Rigid:
      return uniform && std::abs(gram(0, 0) - 1.0) <= tol && det > 0;
    case WarpGroup::RigidRef:
      return uniform && std::abs(gram(0, 0) - 1.0) <= tol;
    case WarpGroup::Sim:
      return uniform && det > 0;
    case WarpGroup::SimRef:
      return uniform;
    case WarpGroup::SimAni:
      // No shear: decomposes as R*diag or diag*R; reflections ride along as
      // negative scales.
      return cols_orthogonal || rows_orthogonal;
    case WarpGroup::Affine:
      return true;
  }
  return false;
}

}  // namespace trajsc
