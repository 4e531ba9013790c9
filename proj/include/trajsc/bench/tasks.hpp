#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trajsc/bench/shapes.hpp"

namespace trajsc::bench {

enum class Orientation { None, Clockwise, CounterClockwise };
enum class SizeSpec { None, Absolute, Ratio };

struct Modifiers {
  Orientation orientation = Orientation::None;
  SizeSpec size = SizeSpec::None;
};

/// A benchmark prompt with its ground-truth shape family. The prompt text
/// is carried as metadata only; nothing parses it.
struct BenchmarkTask {
  std::string id;
  std::string prompt;
  std::string shape_name;
  Trajectory prototype;  // canonical orientation
  WarpGroup group = WarpGroup::SimRef;
  Modifiers modifiers;
  int periods = 0;
};

/// Which modifier combinations to cross with the catalog.
struct ModifierGrid {
  bool base = true;            // unmodified prompt per shape
  bool orientation = true;     // cw/ccw on reflection-carrying shapes
  bool absolute_size = true;   // fully specified size -> rigid family
  bool ratio_size = true;      // aspect ratio -> similarity family
  bool rigid_combo = true;     // absolute size + orientation -> Rigid
};

/// Applies a modifier set to a shape's natural group:
/// absolute size maps Sim→Rigid, SimRef→RigidRef, SimAni→RigidRef;
/// ratio size maps SimAni→SimRef; orientation then maps SimRef→Sim,
/// RigidRef→Rigid. Throws InapplicableModifier when a rule has no mapping
/// for the shape (e.g. absolute size without a size parameter).
WarpGroup modified_group(const BaseShape& shape, const Modifiers& m);

/// Builds one task for an explicit shape/modifier combination.
BenchmarkTask make_task(const BaseShape& shape, const Modifiers& m);

/// Cross product of the catalog with the applicable modifiers of the grid.
/// The default grid yields 49 tasks covering every group at least twice.
std::vector<BenchmarkTask> build_tasks(const std::vector<BaseShape>& catalog,
                                       const ModifierGrid& grid = {});

}  // namespace trajsc::bench
