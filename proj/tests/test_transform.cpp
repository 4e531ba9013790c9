#include <doctest.h>

#include <cmath>

#include "trajsc/random.hpp"
#include "trajsc/transform.hpp"

using namespace trajsc;

TEST_CASE("group constraint checks by decomposition") {
  CHECK(satisfies_group(make_rotation(0.7), WarpGroup::Rigid));
  CHECK(satisfies_group(make_rotation(0.7), WarpGroup::Affine));

  const Transform reflected = make_similarity(1.0, 0.3, 0, 0, true);
  CHECK_FALSE(satisfies_group(reflected, WarpGroup::Rigid));
  CHECK(satisfies_group(reflected, WarpGroup::RigidRef));

  const Transform scaled = make_similarity(1.7, 0.3, 5, -2);
  CHECK_FALSE(satisfies_group(scaled, WarpGroup::Rigid));
  CHECK(satisfies_group(scaled, WarpGroup::Sim));

  const Transform aniso = make_anisotropic(2.0, 0.5, 0.9, 0, 0);
  CHECK_FALSE(satisfies_group(aniso, WarpGroup::SimRef));
  CHECK(satisfies_group(aniso, WarpGroup::SimAni));

  const Transform aniso_after = make_anisotropic(2.0, 0.5, 0.9, 0, 0, true);
  CHECK(satisfies_group(aniso_after, WarpGroup::SimAni));

  CHECK_FALSE(satisfies_group(make_shear(0.5), WarpGroup::SimAni));
  CHECK(satisfies_group(make_shear(0.5), WarpGroup::Affine));
}

TEST_CASE("subgroup closure matches the hierarchy") {
  using G = WarpGroup;
  CHECK(is_subgroup(G::Rigid, G::RigidRef));
  CHECK(is_subgroup(G::Rigid, G::Sim));
  CHECK(is_subgroup(G::RigidRef, G::SimRef));
  CHECK(is_subgroup(G::Sim, G::SimRef));
  CHECK(is_subgroup(G::Sim, G::SimAni));
  CHECK(is_subgroup(G::SimRef, G::Affine));
  CHECK(is_subgroup(G::SimAni, G::Affine));

  CHECK_FALSE(is_subgroup(G::RigidRef, G::Sim));
  CHECK_FALSE(is_subgroup(G::Sim, G::RigidRef));
  CHECK_FALSE(is_subgroup(G::RigidRef, G::SimAni));
  CHECK_FALSE(is_subgroup(G::SimRef, G::SimAni));
  CHECK_FALSE(is_subgroup(G::Affine, G::SimAni));
}

TEST_CASE("dof per group") {
  CHECK(dof(WarpGroup::Rigid) == 3);
  CHECK(dof(WarpGroup::RigidRef) == 3);
  CHECK(dof(WarpGroup::Sim) == 4);
  CHECK(dof(WarpGroup::SimRef) == 4);
  CHECK(dof(WarpGroup::SimAni) == 5);
  CHECK(dof(WarpGroup::Affine) == 6);
}

TEST_CASE("group names round-trip") {
  for (const WarpGroup g : all_groups()) {
    const auto parsed = parse_group(group_name(g));
    REQUIRE(parsed.has_value());
    CHECK(*parsed == g);
  }
  CHECK_FALSE(parse_group("euclidean").has_value());
}

TEST_CASE("inverse composes to the identity") {
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Transform w = make_anisotropic(rng.uniform(0.4, 2.5), rng.uniform(0.4, 2.5),
                                         rng.uniform(0, 6.28), rng.uniform(-40, 40),
                                         rng.uniform(-40, 40));
    const Transform id = compose(w, inverse(w));
    CHECK((id.matrix - Transform::identity(WarpGroup::Rigid).matrix).cwiseAbs().maxCoeff() < 1e-9);
  }
}
