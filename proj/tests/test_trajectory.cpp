#include <doctest.h>

#include <cmath>

#include "trajsc/errors.hpp"
#include "trajsc/random.hpp"
#include "trajsc/trajectory.hpp"

using namespace trajsc;

namespace {

Trajectory make(const std::vector<std::pair<double, double>>& pts,
                const std::string& id = "t") {
  Trajectory t;
  t.id = id;
  t.points.resize(2, static_cast<Eigen::Index>(pts.size()));
  for (std::size_t i = 0; i < pts.size(); ++i) {
    t.points(0, i) = pts[i].first;
    t.points(1, i) = pts[i].second;
  }
  return t;
}

Trajectory circle(double cx, double cy, double r, int n, bool close = true) {
  Trajectory t;
  t.id = "circle";
  const int total = close ? n + 1 : n;
  t.points.resize(2, total);
  for (int i = 0; i < total; ++i) {
    const double a = 2 * M_PI * i / n;
    t.points.col(i) = Eigen::Vector2d(cx + r * std::cos(a), cy + r * std::sin(a));
  }
  return t;
}

}  // namespace

TEST_CASE("normalize removes consecutive duplicates") {
  const Trajectory t = normalize(make({{0, 0}, {0, 0}, {1, 0}}));
  REQUIRE(t.points.cols() == 2);
  CHECK(t.points(0, 1) == doctest::Approx(1.0));
}

TEST_CASE("normalize keeps already clean input unchanged") {
  const Trajectory t = normalize(make({{0, 0}, {1, 0}}));
  CHECK(t.points.cols() == 2);
}

TEST_CASE("normalize rejects zero arc length") {
  CHECK_THROWS_AS(normalize(make({{5, 5}, {5, 5}})), DegenerateTrajectory);
  CHECK_THROWS_AS(normalize(make({{5, 5}})), DegenerateTrajectory);
}

TEST_CASE("normalize rejects non-finite coordinates") {
  Trajectory t = make({{0, 0}, {1, 0}});
  t.points(1, 1) = std::nan("");
  CHECK_THROWS_AS(normalize(t), DegenerateTrajectory);
}

TEST_CASE("resample splits a segment uniformly") {
  const Trajectory t = resample_by_arc_length(make({{0, 0}, {10, 0}}), 3);
  REQUIRE(t.points.cols() == 3);
  CHECK(t.points(0, 1) == doctest::Approx(5.0));
  CHECK(t.points(1, 1) == doctest::Approx(0.0));
}

TEST_CASE("resample of the unit square hits the corners") {
  // Perimeter 4 sampled at arc positions 0,1,2,3,4: the corners plus the
  // closing point.
  const Trajectory square = make({{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}});
  const Trajectory r = resample_by_arc_length(square, 5);
  const double expected[5][2] = {{0, 0}, {1, 0}, {1, 1}, {0, 1}, {0, 0}};
  for (int i = 0; i < 5; ++i) {
    CHECK(r.points(0, i) == doctest::Approx(expected[i][0]).epsilon(1e-12));
    CHECK(r.points(1, i) == doctest::Approx(expected[i][1]).epsilon(1e-12));
  }
}

TEST_CASE("resample preserves already equispaced points") {
  const Trajectory t = resample_by_arc_length(make({{0, 0}, {1, 0}, {2, 0}, {3, 0}}), 4);
  for (int i = 0; i < 4; ++i)
    CHECK(t.points(0, i) == doctest::Approx(static_cast<double>(i)).epsilon(1e-9));
}

TEST_CASE("resample is idempotent at fixed n") {
  const Trajectory c = circle(200, 200, 80, 57);
  const Trajectory once = resample_by_arc_length(normalize(c), 100);
  const Trajectory twice = resample_by_arc_length(once, 100);
  CHECK((once.points - twice.points).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("resampling preserves arc length within 1 percent") {
  const Trajectory c = circle(200, 200, 90, 64);
  const double before = arc_length(c.points);
  const double after =
      arc_length(resample_by_arc_length(normalize(c), 100).points);
  CHECK(std::abs(after - before) / before < 0.01);
}

TEST_CASE("apply_transform matches spec examples") {
  const Trajectory t = make({{0, 0}, {1, 0}});
  const Trajectory moved = apply_transform(make_translation(3, 4), t);
  CHECK(moved.points(0, 0) == doctest::Approx(3.0));
  CHECK(moved.points(1, 0) == doctest::Approx(4.0));

  const Trajectory rot = apply_transform(make_rotation(M_PI / 2), make({{1, 0}}));
  CHECK(rot.points(0, 0) == doctest::Approx(0.0));
  CHECK(rot.points(1, 0) == doctest::Approx(1.0));

  const Trajectory same = apply_transform(Transform::identity(WarpGroup::Rigid), t);
  CHECK((same.points - t.points).norm() == doctest::Approx(0.0));
}

TEST_CASE("transform composition is pointwise composition") {
  Rng rng(7);
  const Trajectory t = circle(200, 200, 50, 40);
  for (int trial = 0; trial < 20; ++trial) {
    const Transform w1 = make_similarity(rng.uniform(0.5, 2.0), rng.uniform(0, 6.28),
                                         rng.uniform(-50, 50), rng.uniform(-50, 50));
    const Transform w2 = make_similarity(rng.uniform(0.5, 2.0), rng.uniform(0, 6.28),
                                         rng.uniform(-50, 50), rng.uniform(-50, 50));
    const Trajectory lhs = apply_transform(w2, apply_transform(w1, t));
    const Trajectory rhs = apply_transform(compose(w2, w1), t);
    CHECK((lhs.points - rhs.points).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("is_closed on circles and segments") {
  CHECK(is_closed(normalize(circle(200, 200, 80, 100))));
  CHECK_FALSE(is_closed(normalize(make({{0, 0}, {100, 0}}))));
}

TEST_CASE("is_closed tolerates a 1 percent endpoint gap") {
  // Leave out the closing point: the gap is about 1% of the circumference,
  // inside the 2% threshold.
  Trajectory c = circle(200, 200, 80, 100, false);
  Trajectory gap = c;
  gap.points.conservativeResize(Eigen::NoChange, 99);
  const double gap_len =
      (gap.points.col(0) - gap.points.col(98)).norm() / arc_length(gap.points);
  REQUIRE(gap_len > 0.005);
  REQUIRE(gap_len < 0.02);
  CHECK(is_closed(normalize(gap)));
}

TEST_CASE("is_closed is invariant under similarity warps") {
  Rng rng(11);
  const Trajectory closed = circle(200, 200, 70, 80);
  const Trajectory open = make({{0, 0}, {50, 40}, {90, 0}});
  for (int trial = 0; trial < 25; ++trial) {
    const Transform w =
        make_similarity(rng.uniform(0.5, 2.0), rng.uniform(0, 6.28),
                        rng.uniform(-100, 100), rng.uniform(-100, 100),
                        trial % 2 == 0);
    CHECK(is_closed(normalize(apply_transform(w, closed))));
    CHECK_FALSE(is_closed(normalize(apply_transform(w, open))));
  }
}

TEST_CASE("rotate_start shifts the start along the cycle") {
  const Trajectory c = normalize(circle(200, 200, 80, 100));
  const Trajectory r = rotate_start(c, 25, 100);
  // Start moved a quarter of the way around.
  CHECK(r.points(0, 0) == doctest::Approx(200.0).epsilon(1e-6));
  CHECK(r.points(1, 0) == doctest::Approx(280.0).epsilon(1e-6));
  // Still exactly closed, same perimeter.
  CHECK((r.points.col(0) - r.points.col(r.points.cols() - 1)).norm() < 1e-12);
  CHECK(arc_length(r.points) ==
        doctest::Approx(arc_length(c.points)).epsilon(1e-6));
}

TEST_CASE("rotate_start with zero offset keeps the start point") {
  const Trajectory c = normalize(circle(200, 200, 80, 100));
  const Trajectory r = rotate_start(c, 0, 100);
  CHECK((r.points.col(0) - c.points.col(0)).norm() < 1e-12);
}
