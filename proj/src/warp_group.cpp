#include "trajsc/warp_group.hpp"

namespace trajsc {

int dof(WarpGroup g) {
  switch (g) {
    case WarpGroup::Rigid:
    case WarpGroup::RigidRef:
      return 3;
    case WarpGroup::Sim:
    case WarpGroup::SimRef:
      return 4;
    case WarpGroup::SimAni:
      return 5;
    case WarpGroup::Affine:
      return 6;
  }
  return 0;
}

bool is_subgroup(WarpGroup sub, WarpGroup super) {
  if (sub == super) return true;
  switch (sub) {
    case WarpGroup::Rigid:
      return true;  // contained in every group
    case WarpGroup::RigidRef:
      return super == WarpGroup::SimRef || super == WarpGroup::Affine;
    case WarpGroup::Sim:
      return super == WarpGroup::SimRef || super == WarpGroup::SimAni ||
             super == WarpGroup::Affine;
    case WarpGroup::SimRef:
      return super == WarpGroup::Affine;
    case WarpGroup::SimAni:
      return super == WarpGroup::Affine;
    case WarpGroup::Affine:
      return false;
  }
  return false;
}

bool allows_reflection(WarpGroup g) {
  switch (g) {
    case WarpGroup::Rigid:
    case WarpGroup::Sim:
      return false;
    case WarpGroup::RigidRef:
    case WarpGroup::SimRef:
    case WarpGroup::SimAni:
    case WarpGroup::Affine:
      return true;
  }
  return false;
}

std::string_view group_name(WarpGroup g) {
  switch (g) {
    case WarpGroup::Rigid:
      return "rigid";
    case WarpGroup::RigidRef:
      return "rigid-ref";
    case WarpGroup::Sim:
      return "sim";
    case WarpGroup::SimRef:
      return "sim-ref";
    case WarpGroup::SimAni:
      return "sim-ani";
    case WarpGroup::Affine:
      return "affine";
  }
  return "?";
}

std::optional<WarpGroup> parse_group(std::string_view name) {
  for (const WarpGroup g : all_groups())
    if (group_name(g) == name) return g;
  return std::nullopt;
}

}  // namespace trajsc
