#include "trajsc/trajectory.hpp"

#include <cmath>

#include "trajsc/errors.hpp"

namespace trajsc {

double arc_length(const Eigen::Ref<const Eigen::Matrix2Xd>& pts) {
  double total = 0.0;
  for (Eigen::Index i = 0; i + 1 < pts.cols(); ++i)
    total += (pts.col(i + 1) - pts.col(i)).norm();
  return total;
}

Trajectory normalize(const Trajectory& t) {
  if (t.points.cols() < 2)
    throw DegenerateTrajectory("trajectory '" + t.id + "' has fewer than 2 points");
  if (!t.points.allFinite())
    throw DegenerateTrajectory("trajectory '" + t.id + "' has non-finite coordinates");

  Eigen::Matrix2Xd out(2, t.points.cols());
  Eigen::Index n = 0;
  out.col(n++) = t.points.col(0);
  for (Eigen::Index i = 1; i < t.points.cols(); ++i) {
    if ((t.points.col(i) - out.col(n - 1)).norm() > 0.0) out.col(n++) = t.points.col(i);
  }
  out.conservativeResize(Eigen::NoChange, n);
  if (n < 2 || arc_length(out) <= 0.0)
    throw DegenerateTrajectory("trajectory '" + t.id + "' has zero arc length");
  return {t.id, std::move(out)};
}

void resample_points(const Eigen::Ref<const Eigen::Matrix2Xd>& pts, int n,
                     Eigen::Matrix2Xd& out, Eigen::VectorXd& cumlen) {
  const Eigen::Index m = pts.cols();
  cumlen.resize(m);
  cumlen[0] = 0.0;
  for (Eigen::Index i = 1; i < m; ++i)
    cumlen[i] = cumlen[i - 1] + (pts.col(i) - pts.col(i - 1)).norm();
  const double total = cumlen[m - 1];
  if (total <= 0.0) throw DegenerateTrajectory("cannot resample a zero-length polyline");

  out.resize(2, n);
  out.col(0) = pts.col(0);
  out.col(n - 1) = pts.col(m - 1);
  Eigen::Index seg = 0;
  for (int j = 1; j + 1 < n; ++j) {
    const double target = total * static_cast<double>(j) / (n - 1);
    while (seg + 2 < m && cumlen[seg + 1] < target) ++seg;
    const double seg_len = cumlen[seg + 1] - cumlen[seg];
    const double a = seg_len > 0.0 ? (target - cumlen[seg]) / seg_len : 0.0;
    out.col(j) = pts.col(seg) + a * (pts.col(seg + 1) - pts.col(seg));
  }
}

Trajectory resample_by_arc_length(const Trajectory& t, int n) {
  if (n < 2) throw Error("resample count must be at least 2");
  Eigen::Matrix2Xd out;
  Eigen::VectorXd scratch;
  resample_points(t.points, n, out, scratch);
  return {t.id, std::move(out)};
}

Trajectory apply_transform(const Transform& w, const Trajectory& t) {
  return {t.id, apply_points(w, t.points)};
}

bool is_closed(const Trajectory& t, double close_frac) {
  const double gap =
      (t.points.col(0) - t.points.col(t.points.cols() - 1)).norm();
  return gap <= close_frac * arc_length(t.points);
}

Trajectory rotate_start(const Trajectory& t, int offset, int n) {
  const Eigen::Matrix2Xd& pts = t.points;
  Eigen::Index m = pts.cols();
  // Work on the cyclic vertex sequence; an exactly repeated closing vertex
  // would otherwise appear twice.
  if ((pts.col(0) - pts.col(m - 1)).norm() < 1e-12) --m;
  if (m < 2) throw DegenerateTrajectory("closed trajectory collapses to a point");

  Eigen::VectorXd cum(m + 1);
  cum[0] = 0.0;
  for (Eigen::Index i = 0; i < m; ++i)
    cum[i + 1] = cum[i] + (pts.col((i + 1) % m) - pts.col(i)).norm();
  const double perimeter = cum[m];

  const int k = ((offset % n) + n) % n;
  const double start = perimeter * static_cast<double>(k) / n;
  Eigen::Index seg = 0;
  while (seg + 1 < m && cum[seg + 1] < start) ++seg;
  const double seg_len = cum[seg + 1] - cum[seg];
  const double a = seg_len > 0.0 ? (start - cum[seg]) / seg_len : 0.0;
  const Eigen::Vector2d q =
      pts.col(seg) + a * (pts.col((seg + 1) % m) - pts.col(seg));

  Eigen::Matrix2Xd out(2, m + 2);
  Eigen::Index c = 0;
  out.col(c++) = q;
  for (Eigen::Index i = 1; i <= m; ++i) {
    const Eigen::Vector2d v = pts.col((seg + i) % m);
    if ((v - out.col(c - 1)).norm() > 1e-12) out.col(c++) = v;
  }
  if ((q - out.col(c - 1)).norm() > 1e-12) out.col(c++) = q;
  out.conservativeResize(Eigen::NoChange, c);
  return {t.id, std::move(out)};
}

}  // namespace trajsc
