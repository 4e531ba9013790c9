#include "trajsc/estimation.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>

#include "trajsc/errors.hpp"

namespace trajsc {

namespace {

constexpr double kMinScale = 1e-4;  // keeps |det| above the 1e-9 floor

void check_sizes(const CorrespondenceSet& c) {
  if (c.source.cols() != c.target.cols() || c.source.cols() < 3)
    throw DegenerateCorrespondences("need equal-length correspondences, at least 3");
}

double clamp_scale(double s) {
  if (std::abs(s) < kMinScale) return s < 0.0 ? -kMinScale : kMinScale;
  return s;
}

struct Centered {
  Eigen::Vector2d mean_src, mean_tgt;
  Eigen::Matrix2d sigma;  // cross-covariance (1/k) * Yc * Xc'
  double var_src = 0.0;   // (1/k) * sum ||xc||^2
};

Centered center(const CorrespondenceSet& c) {
  Centered r;
  const double k = static_cast<double>(c.source.cols());
  r.mean_src = c.source.rowwise().mean();
  r.mean_tgt = c.target.rowwise().mean();
  r.sigma.setZero();
  for (Eigen::Index i = 0; i < c.source.cols(); ++i) {
    const Eigen::Vector2d x = c.source.col(i) - r.mean_src;
    const Eigen::Vector2d y = c.target.col(i) - r.mean_tgt;
    r.sigma += y * x.transpose();
    r.var_src += x.squaredNorm();
  }
  r.sigma /= k;
  r.var_src /= k;
  return r;
}

// Closed-form 2D Kabsch-Umeyama branch. For det=+1 the optimal rotation
// maximizes trace(R'Σ) over R(θ); for det=-1 the optimum ranges over the
// reflection matrices [cosφ sinφ; sinφ -cosφ].
Eigen::Matrix2d optimal_orthogonal(const Eigen::Matrix2d& sigma, bool reflected,
                                   double* gain) {
  Eigen::Matrix2d r;
  if (!reflected) {
    const double a = sigma(0, 0) + sigma(1, 1);
    const double b = sigma(1, 0) - sigma(0, 1);
    const double h = std::hypot(a, b);
    const double cos_t = h > 0.0 ? a / h : 1.0;
    const double sin_t = h > 0.0 ? b / h : 0.0;
    r << cos_t, -sin_t, sin_t, cos_t;
    *gain = h;
  } else {
    const double a = sigma(0, 0) - sigma(1, 1);
    const double b = sigma(1, 0) + sigma(0, 1);
    const double h = std::hypot(a, b);
    const double cos_t = h > 0.0 ? a / h : 1.0;
    const double sin_t = h > 0.0 ? b / h : 0.0;
    r << cos_t, sin_t, sin_t, -cos_t;
    *gain = h;
  }
  return r;
}

Transform fit_orthogonal(const CorrespondenceSet& c, bool allow_reflection,
                         bool with_scale, WarpGroup tag) {
  check_sizes(c);
  const Centered ctr = center(c);
  if (ctr.var_src <= 1e-18)
    throw DegenerateCorrespondences("source covariance is rank 0");

  Transform best;
  double best_res = std::numeric_limits<double>::infinity();
  const int branches = allow_reflection ? 2 : 1;
  for (int b = 0; b < branches; ++b) {
    double gain = 0.0;
    const Eigen::Matrix2d r = optimal_orthogonal(ctr.sigma, b == 1, &gain);
    const double s = with_scale ? clamp_scale(gain / ctr.var_src) : 1.0;
    const Eigen::Matrix2d lin = s * r;
    const Eigen::Vector2d t = ctr.mean_tgt - lin * ctr.mean_src;
    const Transform w = Transform::from_parts(lin, t, tag);
    const double res = residual(w, c);
    if (res < best_res) {
      best_res = res;
      best = w;
    }
  }
  return best;
}

// Per-axis linear regressions of u against x for fixed rotation; writes
// slopes and intercepts, returns the summed squared residual.
struct AxisFit {
  double sx, sy, tx, ty;
};

}  // namespace

double residual(const Transform& w, const CorrespondenceSet& c) {
  double sum = 0.0;
  const Eigen::Matrix2d a = w.linear();
  const Eigen::Vector2d t = w.translation();
  for (Eigen::Index i = 0; i < c.source.cols(); ++i)
    sum += (a * c.source.col(i) + t - c.target.col(i)).norm();
  return sum / static_cast<double>(c.source.cols());
}

double triangle_area2(const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                      const Eigen::Vector2d& c) {
  const Eigen::Vector2d u = b - a, v = c - a;
  return u.x() * v.y() - u.y() * v.x();
}

Transform estimate_rigid(const CorrespondenceSet& c, bool allow_reflection) {
  return fit_orthogonal(c, allow_reflection, false,
                        allow_reflection ? WarpGroup::RigidRef : WarpGroup::Rigid);
}

Transform estimate_similarity(const CorrespondenceSet& c, bool allow_reflection) {
  return fit_orthogonal(c, allow_reflection, true,
                        allow_reflection ? WarpGroup::SimRef : WarpGroup::Sim);
}

Transform estimate_affine(const CorrespondenceSet& c) {
  check_sizes(c);
  const Eigen::Index k = c.source.cols();
  if (k == 3) {
    if (std::abs(triangle_area2(c.source.col(0), c.source.col(1),
                                c.source.col(2))) <= 2e-6)
      throw DegenerateCorrespondences("collinear source points");
    Eigen::Matrix2d d, q;
    d.col(0) = c.source.col(1) - c.source.col(0);
    d.col(1) = c.source.col(2) - c.source.col(0);
    q.col(0) = c.target.col(1) - c.target.col(0);
    q.col(1) = c.target.col(2) - c.target.col(0);
    const Eigen::Matrix2d a = q * d.inverse();
    const Eigen::Vector2d t = c.target.col(0) - a * c.source.col(0);
    return Transform::from_parts(a, t, WarpGroup::Affine);
  }

  Eigen::MatrixXd p(k, 3);
  p.leftCols<2>() = c.source.transpose();
  p.col(2).setOnes();
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(p);
  qr.setThreshold(1e-9);
  if (qr.rank() < 3) throw DegenerateCorrespondences("collinear source points");
  const Eigen::MatrixXd sol = qr.solve(c.target.transpose());  // 3×2
  Transform w;
  w.matrix.leftCols<2>() = sol.topRows<2>().transpose();
  w.matrix.col(2) = sol.row(2).transpose();
  w.group = WarpGroup::Affine;
  return w;
}

namespace {

// Objective machinery for the anisotropic search. For order A = R(θ)·S the
// model in rotated-target coordinates u = R(θ)'·y decouples into two 1-D
// regressions u_a ≈ s_a·x_a + t_a; for A = S·R(θ) the same holds with
// v = R(θ)·x regressed against the raw target.
struct AnisoProblem {
  const CorrespondenceSet& c;
  bool scale_after_rotation;  // true: A = S·R(θ)
  double inv_k;

  // Returns the mean *squared* point error at the per-axis LSQ optimum.
  double objective(double theta, AxisFit* fit = nullptr) const {
    const double ct = std::cos(theta), st = std::sin(theta);
    const Eigen::Index k = c.source.cols();
    double sa = 0, sb = 0, saa = 0, sbb = 0, su = 0, sv = 0, sau = 0, sbv = 0,
           suu = 0, svv = 0;
    for (Eigen::Index i = 0; i < k; ++i) {
      double a, b, u, v;
      if (!scale_after_rotation) {
        a = c.source(0, i);
        b = c.source(1, i);
        u = ct * c.target(0, i) + st * c.target(1, i);
        v = -st * c.target(0, i) + ct * c.target(1, i);
      } else {
        a = ct * c.source(0, i) - st * c.source(1, i);
        b = st * c.source(0, i) + ct * c.source(1, i);
        u = c.target(0, i);
        v = c.target(1, i);
      }
      sa += a;
      sb += b;
      su += u;
      sv += v;
      saa += a * a;
      sbb += b * b;
      sau += a * u;
      sbv += b * v;
      suu += u * u;
      svv += v * v;
    }
    const double va = saa - sa * sa * inv_k;
    const double vb = sbb - sb * sb * inv_k;
    const double ca = sau - sa * su * inv_k;
    const double cb = sbv - sb * sv * inv_k;
    const double sx = va > 1e-12 ? ca / va : 1.0;
    const double sy = vb > 1e-12 ? cb / vb : 1.0;
    const double sse_x = (suu - su * su * inv_k) - 2.0 * sx * ca + sx * sx * va;
    const double sse_y = (svv - sv * sv * inv_k) - 2.0 * sy * cb + sy * sy * vb;
    if (fit) {
      fit->sx = sx;
      fit->sy = sy;
      fit->tx = (su - sx * sa) * inv_k;
      fit->ty = (sv - sy * sb) * inv_k;
    }
    return std::max(0.0, sse_x + sse_y) * inv_k;
  }

  Transform build(double theta) const {
    AxisFit fit;
    objective(theta, &fit);
    const double sx = clamp_scale(fit.sx), sy = clamp_scale(fit.sy);
    const double ct = std::cos(theta), st = std::sin(theta);
    Eigen::Matrix2d r;
    r << ct, -st, st, ct;
    const Eigen::Matrix2d d = Eigen::Vector2d(sx, sy).asDiagonal();
    Eigen::Matrix2d lin;
    Eigen::Vector2d t;
    if (!scale_after_rotation) {
      // u = D x + t'  with  u = R' y  =>  y = R D x + R t'
      lin = r * d;
      t = r * Eigen::Vector2d(fit.tx, fit.ty);
    } else {
      lin = d * r;
      t = Eigen::Vector2d(fit.tx, fit.ty);
    }
    return Transform::from_parts(lin, t, WarpGroup::SimAni);
  }
};

double golden_section(const AnisoProblem& p, double lo, double hi, double tol) {
  constexpr double kInvPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = p.objective(x1), f2 = p.objective(x2);
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = p.objective(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = p.objective(x2);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

Transform estimate_anisotropic(const CorrespondenceSet& c,
                               const AnisoOptions& opts) {
  check_sizes(c);
  const Eigen::Index k = c.source.cols();
  if (k == 3 && std::abs(triangle_area2(c.source.col(0), c.source.col(1),
                                        c.source.col(2))) <= 2e-6)
    throw DegenerateCorrespondences("collinear source points");
  const Centered ctr = center(c);
  if (ctr.var_src <= 1e-18)
    throw DegenerateCorrespondences("source covariance is rank 0");

  const int kGrid = opts.grid_samples;
  const double kStep = 2.0 * M_PI / kGrid;
  Transform best;
  double best_res = std::numeric_limits<double>::infinity();
  for (const bool after : {false, true}) {
    const AnisoProblem prob{c, after, 1.0 / static_cast<double>(k)};
    int arg = 0;
    double arg_val = std::numeric_limits<double>::infinity();
    for (int i = 0; i < kGrid; ++i) {
      const double f = prob.objective(i * kStep);
      if (f < arg_val) {
        arg_val = f;
        arg = i;
      }
    }
    // The coarse grid bounds the angular error to one step; golden-section
    // tightens it far enough that exact-model problems recover parameters
    // to sub-1e-6 residuals.
    const double theta = golden_section(prob, (arg - 1) * kStep,
                                        (arg + 1) * kStep, opts.golden_tol);
    const Transform w = prob.build(theta);
    const double res = residual(w, c);
    if (res < best_res) {
      best_res = res;
      best = w;
    }
  }
  return best;
}

Transform estimate_for_group(const CorrespondenceSet& c, WarpGroup g,
                             const AnisoOptions& aniso) {
  switch (g) {
    case WarpGroup::Rigid:
      return estimate_rigid(c, false);
    case WarpGroup::RigidRef:
      return estimate_rigid(c, true);
    case WarpGroup::Sim:
      return estimate_similarity(c, false);
    case WarpGroup::SimRef:
      return estimate_similarity(c, true);
    case WarpGroup::SimAni:
      return estimate_anisotropic(c, aniso);
    case WarpGroup::Affine:
      return estimate_affine(c);
  }
  throw Error("unknown warp group");
}

}  // namespace trajsc
