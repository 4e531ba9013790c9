#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace trajsc {

/// The six 2D Lie transformation groups, in ascending linearization order:
/// Rigid < RigidRef < Sim < SimRef < SimAni < Affine.
/// The linearization is one valid topological sort of the partial order;
/// RigidRef and Sim are incomparable and ordered by DOF then reflection flag.
enum class WarpGroup : int {
  Rigid = 0,     // rotation + translation, SE(2)
  RigidRef = 1,  // rigid + reflections, E(2)
  Sim = 2,       // rigid + uniform scale, Sim+(2)
  SimRef = 3,    // similarity + reflections, Sim(2)
  SimAni = 4,    // rotation + per-axis scale + translation (no shear)
  Affine = 5,    // full affine, Aff(2)
};

inline constexpr int kNumGroups = 6;

inline constexpr std::array<WarpGroup, kNumGroups> all_groups() {
  return {WarpGroup::Rigid,  WarpGroup::RigidRef, WarpGroup::Sim,
          WarpGroup::SimRef, WarpGroup::SimAni,   WarpGroup::Affine};
}

/// Degrees of freedom: 3, 3, 4, 4, 5, 6.
int dof(WarpGroup g);

/// True when every warp of `sub` is also a warp of `super` (partial order
/// closure): Rigid ⊆ RigidRef ⊆ SimRef, Rigid ⊆ Sim ⊆ SimRef,
/// Sim ⊆ SimAni ⊆ Affine, SimRef ⊆ Affine. Reflexive.
bool is_subgroup(WarpGroup sub, WarpGroup super);

/// True when the group contains reflections (or, for SimAni, negative
/// per-axis scales that subsume them).
bool allows_reflection(WarpGroup g);

/// Kebab-case name used in JSON and on the CLI: "rigid", "rigid-ref",
/// "sim", "sim-ref", "sim-ani", "affine".
std::string_view group_name(WarpGroup g);

std::optional<WarpGroup> parse_group(std::string_view name);

}  // namespace trajsc
