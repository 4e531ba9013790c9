#include "trajsc/bench/shapes.hpp"

#include <cmath>
#include <functional>

#include "trajsc/errors.hpp"

namespace trajsc::bench {

namespace {

constexpr double kCx = 200.0, kCy = 200.0;

Eigen::Matrix2Xd param_curve(int n, const std::function<Eigen::Vector2d(double)>& f,
                             double t0, double t1) {
  Eigen::Matrix2Xd pts(2, n);
  for (int i = 0; i < n; ++i) {
    const double t = t0 + (t1 - t0) * static_cast<double>(i) / (n - 1);
    pts.col(i) = f(t) + Eigen::Vector2d(kCx, kCy);
  }
  return pts;
}

// Closed polygon sampled along its edges, corners included, ending back at
// the first vertex.
Eigen::Matrix2Xd polygon(const std::vector<Eigen::Vector2d>& verts,
                         int pts_per_edge) {
  const int m = static_cast<int>(verts.size());
  Eigen::Matrix2Xd pts(2, m * pts_per_edge + 1);
  int c = 0;
  for (int e = 0; e < m; ++e) {
    const Eigen::Vector2d a = verts[e], b = verts[(e + 1) % m];
    for (int i = 0; i < pts_per_edge; ++i)
      pts.col(c++) = a + (b - a) * static_cast<double>(i) / pts_per_edge +
                     Eigen::Vector2d(kCx, kCy);
  }
  pts.col(c) = verts[0] + Eigen::Vector2d(kCx, kCy);
  return pts;
}

Trajectory circle_fn() {
  return {"circle", param_curve(101,
                                [](double t) {
                                  return Eigen::Vector2d(80 * std::cos(t),
                                                         80 * std::sin(t));
                                },
                                0, 2 * M_PI)};
}

Trajectory ellipse_fn() {
  return {"ellipse", param_curve(101,
                                 [](double t) {
                                   return Eigen::Vector2d(110 * std::cos(t),
                                                          60 * std::sin(t));
                                 },
                                 0, 2 * M_PI)};
}

Trajectory square_fn() {
  return {"square", polygon({{-70, -70}, {70, -70}, {70, 70}, {-70, 70}}, 25)};
}

Trajectory rectangle_fn() {
  return {"rectangle", polygon({{-80, -45}, {80, -45}, {80, 45}, {-80, 45}}, 25)};
}

Trajectory equilateral_triangle_fn() {
  const double r = 150.0 / std::sqrt(3.0);
  std::vector<Eigen::Vector2d> v;
  for (int k = 0; k < 3; ++k) {
    const double a = -M_PI / 2 + 2 * M_PI * k / 3;  // apex up, base horizontal
    v.emplace_back(r * std::cos(a), r * std::sin(a));
  }
  return {"equilateral-triangle", polygon(v, 30)};
}

Trajectory right_triangle_fn() {
  // Legs along the screen axes (canonical frame), right angle bottom-left.
  return {"right-triangle", polygon({{-65, 45}, {-65, -45}, {65, 45}}, 30)};
}

Trajectory pentagon_fn() {
  std::vector<Eigen::Vector2d> v;
  for (int k = 0; k < 5; ++k) {
    const double a = -M_PI / 2 + 2 * M_PI * k / 5;
    v.emplace_back(85 * std::cos(a), 85 * std::sin(a));
  }
  return {"pentagon", polygon(v, 20)};
}

Trajectory parallelogram_fn() {
  return {"parallelogram",
          polygon({{-85, 35}, {45, 35}, {85, -35}, {-45, -35}}, 25)};
}

Trajectory scalene_triangle_fn() {
  return {"scalene-triangle", polygon({{-70, 50}, {75, 30}, {-10, -65}}, 30)};
}

Trajectory figure_eight_fn() {
  return {"figure-eight",
          param_curve(121,
                      [](double t) {
                        const double d = 1 + std::sin(t) * std::sin(t);
                        return Eigen::Vector2d(140 * std::cos(t) / d,
                                               140 * std::sin(t) * std::cos(t) / d);
                      },
                      0, 2 * M_PI)};
}

Trajectory rose_fn() {
  return {"four-petal-rose",
          param_curve(181,
                      [](double t) {
                        const double r = 95 * std::cos(2 * t);
                        return Eigen::Vector2d(r * std::cos(t), r * std::sin(t));
                      },
                      0, 2 * M_PI)};
}

Trajectory parabola_fn() {
  return {"parabola", param_curve(81,
                                  [](double x) {
                                    return Eigen::Vector2d(
                                        x, 110 * (x / 110) * (x / 110) - 55);
                                  },
                                  -110, 110)};
}

Trajectory sine_wave_fn() {
  return {"sine-wave",
          param_curve(121,
                      [](double x) {
                        return Eigen::Vector2d(
                            x, 60 * std::sin(2 * M_PI * 2 * (x + 130) / 260));
                      },
                      -130, 130)};
}

Trajectory spiral_fn() {
  const double turns = 3.0;
  const double growth = 90.0 / (turns * 2 * M_PI);
  return {"archimedean-spiral",
          param_curve(181,
                      [=](double t) {
                        return Eigen::Vector2d(growth * t * std::cos(t),
                                               growth * t * std::sin(t));
                      },
                      0, turns * 2 * M_PI)};
}

Trajectory deltoid_fn() {
  return {"deltoid", param_curve(151,
                                 [](double t) {
                                   return Eigen::Vector2d(
                                       30 * (2 * std::cos(t) + std::cos(2 * t)),
                                       30 * (2 * std::sin(t) - std::sin(2 * t)));
                                 },
                                 0, 2 * M_PI)};
}

}  // namespace

std::vector<BaseShape> shape_catalog() {
  using G = WarpGroup;
  std::vector<BaseShape> shapes;
  auto add = [&](BaseShape s) { shapes.push_back(std::move(s)); };

  add({"circle", G::SimRef, true, true, 0, 1, {"radius", ""}, {80, 0}, 0, circle_fn});
  add({"ellipse", G::SimAni, true, true, 0, 2,
       {"semi-major axis", "semi-minor axis"}, {110, 60}, 0, ellipse_fn});
  add({"square", G::SimRef, true, false, 1, 1, {"side length", ""}, {140, 0}, 0,
       square_fn});
  add({"rectangle", G::SimAni, true, false, 1, 2, {"width", "height"}, {160, 90},
       0, rectangle_fn});
  add({"equilateral-triangle", G::SimRef, true, false, 2, 1,
       {"side length", ""}, {150, 0}, 0, equilateral_triangle_fn});
  add({"right-triangle", G::SimAni, true, false, 2, 2, {"base", "height"},
       {130, 90}, 0, right_triangle_fn});
  add({"pentagon", G::SimRef, true, false, 3, 1, {"circumradius", ""}, {85, 0},
       0, pentagon_fn});
  add({"parallelogram", G::Affine, true, false, 1, 0, {"", ""}, {0, 0}, 0,
       parallelogram_fn});
  add({"scalene-triangle", G::Affine, true, false, 2, 0, {"", ""}, {0, 0}, 0,
       scalene_triangle_fn});
  add({"figure-eight", G::SimRef, true, false, 4, 1, {"width", ""}, {280, 0}, 0,
       figure_eight_fn});
  add({"four-petal-rose", G::SimRef, true, false, 5, 1, {"petal length", ""},
       {95, 0}, 0, rose_fn});
  add({"parabola", G::SimAni, false, false, 6, 2, {"width", "height"},
       {220, 110}, 0, parabola_fn});
  add({"sine-wave", G::SimAni, false, false, 7, 2, {"horizontal extent", "amplitude"},
       {260, 60}, 2, sine_wave_fn});
  add({"archimedean-spiral", G::SimRef, false, false, 8, 1, {"outer radius", ""},
       {90, 0}, 3, spiral_fn});
  add({"deltoid", G::SimRef, true, false, 9, 1, {"size", ""}, {90, 0}, 0,
       deltoid_fn});
  return shapes;
}

const BaseShape& find_shape(const std::string& name) {
  static const std::vector<BaseShape> catalog = shape_catalog();
  for (const auto& s : catalog)
    if (s.name == name) return s;
  throw Error("unknown shape: " + name);
}

Trajectory make_star_polygon(int p, int q, double radius, int pts_per_edge) {
  std::vector<Eigen::Vector2d> verts;
  int v = 0;
  for (int k = 0; k < p; ++k) {
    const double a = -M_PI / 2 + 2 * M_PI * v / p;
    verts.emplace_back(radius * std::cos(a), radius * std::sin(a));
    v = (v + q) % p;
  }
  Eigen::Matrix2Xd pts(2, static_cast<int>(verts.size()) * pts_per_edge + 1);
  int c = 0;
  for (std::size_t e = 0; e < verts.size(); ++e) {
    const Eigen::Vector2d a = verts[e], b = verts[(e + 1) % verts.size()];
    for (int i = 0; i < pts_per_edge; ++i)
      pts.col(c++) = a + (b - a) * static_cast<double>(i) / pts_per_edge +
                     Eigen::Vector2d(200, 200);
  }
  pts.col(c) = verts[0] + Eigen::Vector2d(200, 200);
  return {"star-" + std::to_string(p) + "-" + std::to_string(q), pts};
}

}  // namespace trajsc::bench
