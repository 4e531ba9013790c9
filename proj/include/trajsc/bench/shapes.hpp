#pragma once

#include <array>
#include <string>
#include <vector>

#include "trajsc/trajectory.hpp"
#include "trajsc/warp_group.hpp"

namespace trajsc::bench {

/// A parametric base shape of the benchmark: a prototype generator in its
/// canonical orientation (symmetry axes / right angles aligned with the
/// screen axes), the transformation group its unmodified prompt implies,
/// and the size parameters its prompt templates can reference.
struct BaseShape {
  std::string name;
  WarpGroup natural_group = WarpGroup::SimRef;
  bool closed = false;
  // Affine images of conics stay inside the anisotropic-similarity family,
  // which rules out shear-style distractors for them.
  bool elliptical = false;
  // Shapes sharing an affine equivalence class (all triangles, all
  // parallelograms, all conics) can be warped into one another, so
  // distractors must come from a different class.
  int affine_class = 0;
  int n_size_params = 0;
  std::array<std::string, 2> size_param_names{};
  std::array<double, 2> default_size{};
  int periods = 0;  // period/turn count for periodic shapes, 0 otherwise
  Trajectory (*make)() = nullptr;
};

/// The benchmark catalog. Every generator emits at least 50 points,
/// centered on the 400×400 canvas, traversed clockwise in screen space
/// (y-down) where orientation applies.
std::vector<BaseShape> shape_catalog();

const BaseShape& find_shape(const std::string& name);

/// Star polygon {p/q} (e.g. heptagram {7/2}), used by multi-prototype
/// experiments; not part of the default catalog.
Trajectory make_star_polygon(int p, int q, double radius, int pts_per_edge = 12);

}  // namespace trajsc::bench
