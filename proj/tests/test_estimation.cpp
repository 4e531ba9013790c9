#include <doctest.h>

#include <cmath>

#include "trajsc/errors.hpp"
#include "trajsc/estimation.hpp"
#include "trajsc/random.hpp"

using namespace trajsc;

namespace {

CorrespondenceSet corr(const std::vector<std::pair<double, double>>& src,
                       const std::vector<std::pair<double, double>>& tgt) {
  CorrespondenceSet c;
  c.source.resize(2, static_cast<Eigen::Index>(src.size()));
  c.target.resize(2, static_cast<Eigen::Index>(tgt.size()));
  for (std::size_t i = 0; i < src.size(); ++i) {
    c.source.col(i) = Eigen::Vector2d(src[i].first, src[i].second);
    c.target.col(i) = Eigen::Vector2d(tgt[i].first, tgt[i].second);
  }
  return c;
}

// Random non-collinear source triple, resampled until well-conditioned.
Eigen::Matrix2Xd random_triple(Rng& rng) {
  Eigen::Matrix2Xd pts(2, 3);
  for (;;) {
    for (int i = 0; i < 3; ++i)
      pts.col(i) = Eigen::Vector2d(rng.uniform(-100, 100), rng.uniform(-100, 100));
    if (std::abs(triangle_area2(pts.col(0), pts.col(1), pts.col(2))) > 100.0)
      return pts;
  }
}

CorrespondenceSet warped_triple(Rng& rng, const Transform& w) {
  CorrespondenceSet c;
  c.source = random_triple(rng);
  c.target = apply_points(w, c.source);
  return c;
}

}  // namespace

TEST_CASE("rigid estimation recovers the identity and exact models") {
  const auto same = corr({{0, 0}, {10, 0}, {0, 10}}, {{0, 0}, {10, 0}, {0, 10}});
  const Transform id = estimate_rigid(same, false);
  CHECK(residual(id, same) < 1e-9);
  CHECK((id.matrix - Transform::identity(WarpGroup::Rigid).matrix).cwiseAbs().maxCoeff() < 1e-9);

  // target = source rotated 30° then translated (5, -2)
  const Transform truth = compose(make_translation(5, -2), make_rotation(M_PI / 6));
  Rng rng(17);
  const CorrespondenceSet c = warped_triple(rng, truth);
  const Transform w = estimate_rigid(c, false);
  CHECK(residual(w, c) < 1e-9);
  CHECK((w.matrix - truth.matrix).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("mirrored targets split the reflection branches") {
  Rng rng(23);
  Eigen::Matrix2Xd src = random_triple(rng);
  CorrespondenceSet c;
  c.source = src;
  c.target = src;
  c.target.row(1) = -c.target.row(1);  // mirror across the x axis

  const Transform no_ref = estimate_rigid(c, false);
  CHECK(no_ref.linear().determinant() > 0.0);
  CHECK(residual(no_ref, c) > 1.0);

  const Transform with_ref = estimate_rigid(c, true);
  CHECK(with_ref.linear().determinant() < 0.0);
  CHECK(residual(with_ref, c) < 1e-9);
}

TEST_CASE("similarity estimation recovers scale") {
  const auto doubled = corr({{0, 0}, {10, 0}, {0, 10}}, {{0, 0}, {20, 0}, {0, 20}});
  const Transform w = estimate_similarity(doubled, false);
  CHECK(residual(w, doubled) < 1e-9);
  CHECK(w.linear()(0, 0) == doctest::Approx(2.0).epsilon(1e-12));

  const auto same = corr({{0, 0}, {10, 0}, {0, 10}}, {{0, 0}, {10, 0}, {0, 10}});
  CHECK((estimate_similarity(same, true).matrix -
         Transform::identity(WarpGroup::Sim).matrix)
            .cwiseAbs()
            .maxCoeff() < 1e-9);
}

TEST_CASE("similarity with reflection fits scaled rotated mirrored targets") {
  Rng rng(29);
  const Transform truth =
      compose(make_translation(7, 3), make_similarity(0.5, M_PI / 4, 0, 0, true));
  const CorrespondenceSet c = warped_triple(rng, truth);
  CHECK(residual(estimate_similarity(c, true), c) < 1e-9);
  CHECK(residual(estimate_similarity(c, false), c) > 1e-3);
}

TEST_CASE("affine solves the 3-point shear system exactly") {
  const auto c = corr({{0, 0}, {1, 0}, {0, 1}}, {{0, 0}, {2, 0}, {1, 1}});
  const Transform w = estimate_affine(c);
  Matrix23d expected;
  expected << 2, 1, 0, 0, 1, 0;
  CHECK((w.matrix - expected).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("affine identity and collinear failure") {
  const auto same = corr({{0, 0}, {10, 0}, {0, 10}}, {{0, 0}, {10, 0}, {0, 10}});
  CHECK((estimate_affine(same).matrix - Transform::identity(WarpGroup::Affine).matrix)
            .cwiseAbs()
            .maxCoeff() < 1e-12);

  const auto collinear = corr({{0, 0}, {1, 1}, {2, 2}}, {{0, 0}, {1, 0}, {2, 0}});
  CHECK_THROWS_AS(estimate_affine(collinear), DegenerateCorrespondences);
  CHECK_THROWS_AS(estimate_anisotropic(collinear), DegenerateCorrespondences);
}

TEST_CASE("rank-0 source covariance is degenerate") {
  const auto c = corr({{5, 5}, {5, 5}, {5, 5}}, {{0, 0}, {1, 0}, {0, 1}});
  CHECK_THROWS_AS(estimate_rigid(c, false), DegenerateCorrespondences);
  CHECK_THROWS_AS(estimate_similarity(c, true), DegenerateCorrespondences);
}

TEST_CASE("anisotropic recovers an axis-aligned scale") {
  const auto c = corr({{0, 0}, {10, 0}, {0, 10}}, {{0, 0}, {20, 0}, {0, 30}});
  const Transform w = estimate_anisotropic(c);
  CHECK(residual(w, c) < 1e-6);
  // Up to the (θ, sign) gauge the linear part must be diag(2, 3).
  Eigen::Matrix2d expected;
  expected << 2, 0, 0, 3;
  CHECK((w.linear() - expected).cwiseAbs().maxCoeff() < 1e-5);
}

TEST_CASE("anisotropic identity") {
  const auto same = corr({{0, 0}, {10, 0}, {0, 10}}, {{0, 0}, {10, 0}, {0, 10}});
  CHECK(residual(estimate_anisotropic(same), same) < 1e-9);
}

TEST_CASE("shear lies outside the anisotropic group but inside affine") {
  // Pure shear [1 0.5; 0 1]: anisotropic similarity cannot reach it while
  // the affine solve is exact.
  Rng rng(31);
  const Transform shear = make_shear(0.5);
  const CorrespondenceSet c = warped_triple(rng, shear);
  CHECK(residual(estimate_affine(c), c) < 1e-9);
  CHECK(residual(estimate_anisotropic(c), c) > 1e-3);
}

TEST_CASE("model-class recovery across all estimators") {
  Rng rng(101);
  int aniso_order_flips = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const double theta = rng.uniform(0, 2 * M_PI);
    const double s = rng.log_uniform(0.5, 2.0);
    const double tx = rng.uniform(-100, 100), ty = rng.uniform(-100, 100);

    {
      const Transform truth = compose(make_translation(tx, ty), make_rotation(theta));
      const CorrespondenceSet c = warped_triple(rng, truth);
      CHECK(residual(estimate_rigid(c, false), c) < 1e-6);
    }
    {
      const bool reflect = rng.bernoulli(0.5);
      const Transform truth =
          compose(make_translation(tx, ty), make_similarity(s, theta, 0, 0, reflect));
      const CorrespondenceSet c = warped_triple(rng, truth);
      CHECK(residual(estimate_similarity(c, true), c) < 1e-6);
    }
    {
      const double sx = rng.log_uniform(0.5, 2.0), sy = rng.log_uniform(0.5, 2.0);
      const bool after = rng.bernoulli(0.5);
      aniso_order_flips += after;
      const Transform truth = compose(make_translation(tx, ty),
                                      make_anisotropic(sx, sy, theta, 0, 0, after));
      const CorrespondenceSet c = warped_triple(rng, truth);
      const Transform w = estimate_anisotropic(c);
      CHECK(residual(w, c) < 1e-6);
      CHECK(satisfies_group(w, WarpGroup::SimAni));
    }
    {
      const Transform truth = compose(
          make_translation(tx, ty),
          compose(make_rotation(theta),
                  compose(make_shear(rng.uniform(-0.5, 0.5)),
                          make_anisotropic(s, rng.log_uniform(0.5, 2.0), 0, 0, 0))));
      const CorrespondenceSet c = warped_triple(rng, truth);
      CHECK(residual(estimate_affine(c), c) < 1e-6);
    }
  }
  CHECK(aniso_order_flips > 10);  // both decomposition orders exercised
}

TEST_CASE("residuals shrink as the group grows") {
  Rng rng(211);
  for (int trial = 0; trial < 30; ++trial) {
    CorrespondenceSet c;
    c.source = random_triple(rng);
    c.target = random_triple(rng);
    const double r_rigid = residual(estimate_rigid(c, false), c);
    const double r_rigid_ref = residual(estimate_rigid(c, true), c);
    const double r_sim = residual(estimate_similarity(c, false), c);
    const double r_sim_ref = residual(estimate_similarity(c, true), c);
    const double r_aniso = residual(estimate_anisotropic(c), c);
    const double r_affine = residual(estimate_affine(c), c);

    const double slack = 1e-9;
    CHECK(r_rigid_ref <= r_rigid + slack);
    CHECK(r_sim <= r_rigid + slack);
    CHECK(r_sim_ref <= r_sim + slack);
    CHECK(r_sim_ref <= r_rigid_ref + slack);
    CHECK(r_aniso <= r_sim_ref + 1e-6);
    CHECK(r_affine <= r_aniso + slack);
  }
}

TEST_CASE("every estimate satisfies its group constraints") {
  Rng rng(307);
  for (int trial = 0; trial < 40; ++trial) {
    CorrespondenceSet c;
    c.source = random_triple(rng);
    c.target = random_triple(rng);
    CHECK(satisfies_group(estimate_rigid(c, false), WarpGroup::Rigid));
    CHECK(satisfies_group(estimate_rigid(c, true), WarpGroup::RigidRef));
    const Transform sim = estimate_similarity(c, false);
    CHECK(satisfies_group(sim, WarpGroup::Sim));
    CHECK(sim.linear().col(0).norm() > 0.0);  // scale strictly positive
    CHECK(satisfies_group(estimate_similarity(c, true), WarpGroup::SimRef));
    const Transform aniso = estimate_anisotropic(c);
    CHECK(satisfies_group(aniso, WarpGroup::SimAni));
    CHECK(std::abs(aniso.linear().determinant()) > 1e-9);
  }
}
