#pragma once

#include <Eigen/Core>
#include <string>

#include "trajsc/transform.hpp"

namespace trajsc {

/// An object's center-point path over time: an ordered 2D point sequence in
/// a 400×400 px canvas with the y-axis pointing down (screen space). Time is
/// implied by index order; only the geometric path carries meaning. The
/// canvas is a rendering convention, points are never clamped to it.
struct Trajectory {
  std::string id;
  Eigen::Matrix2Xd points;  // one column per time sample
};

inline constexpr double kCanvasSize = 400.0;

/// Total polyline length of a 2×N point sequence.
double arc_length(const Eigen::Ref<const Eigen::Matrix2Xd>& pts);

/// Removes consecutive duplicate points and validates the result: at least
/// 2 points, finite coordinates, positive arc length.
/// Throws DegenerateTrajectory otherwise.
Trajectory normalize(const Trajectory& t);

/// Returns exactly n points equally spaced along cumulative arc length by
/// linear interpolation of the polyline; the first and last input points
/// are preserved. Expects a normalized trajectory and n ≥ 2.
Trajectory resample_by_arc_length(const Trajectory& t, int n);

/// Low-level resampler used by the ICP inner loop: writes n equally spaced
/// points into `out` (resized as needed), using `cumlen` as scratch.
void resample_points(const Eigen::Ref<const Eigen::Matrix2Xd>& pts, int n,
                     Eigen::Matrix2Xd& out, Eigen::VectorXd& cumlen);

/// Maps every point through the transform, preserving order.
Trajectory apply_transform(const Transform& w, const Trajectory& t);

/// True iff the endpoint gap is at most `close_frac` of the arc length.
/// Closed trajectories (circles, squares) may start anywhere along the
/// curve, so the distance computation searches over start points for them.
bool is_closed(const Trajectory& t, double close_frac = 0.02);

/// Re-indexes a closed trajectory so it starts at cyclic arc position
/// (offset / n) of the perimeter, inserting an interpolated start vertex
/// when that position falls inside a segment. The result is exactly closed
/// (first point repeated at the end). Expects a normalized trajectory.
Trajectory rotate_start(const Trajectory& t, int offset, int n);

}  // namespace trajsc
