#include "trajsc/bench/tasks.hpp"

#include <numeric>

#include "trajsc/errors.hpp"

namespace trajsc::bench {

namespace {

std::string ratio_string(double a, double b) {
  const long ia = std::lround(a), ib = std::lround(b);
  const long g = std::gcd(ia, ib);
  return std::to_string(ia / g) + ":" + std::to_string(ib / g);
}

std::string format_px(double v) { return std::to_string(std::lround(v)); }

std::string size_phrase(const BaseShape& s, SizeSpec spec) {
  if (spec == SizeSpec::Absolute) {
    std::string p = " with a " + s.size_param_names[0] + " of " +
                    format_px(s.default_size[0]) + " px";
    if (s.n_size_params == 2)
      p += " and a " + s.size_param_names[1] + " of " +
           format_px(s.default_size[1]) + " px";
    return p;
  }
  if (spec == SizeSpec::Ratio)
    return " with a " + ratio_string(s.default_size[0], s.default_size[1]) +
           " aspect ratio";
  return "";
}

Trajectory oriented_prototype(const BaseShape& shape, Orientation o) {
  Trajectory proto = shape.make();
  // Generators traverse clockwise in screen space; counterclockwise tasks
  // reverse the sample order.
  if (o == Orientation::CounterClockwise)
    proto.points = proto.points.rowwise().reverse().eval();
  return proto;
}

}  // namespace

WarpGroup modified_group(const BaseShape& shape, const Modifiers& m) {
  WarpGroup g = shape.natural_group;

  if (m.size == SizeSpec::Absolute) {
    if (shape.n_size_params == 0)
      throw InapplicableModifier("shape '" + shape.name +
                                 "' has no size parameter");
    switch (g) {
      case WarpGroup::Sim:
        g = WarpGroup::Rigid;
        break;
      case WarpGroup::SimRef:
      case WarpGroup::SimAni:
        g = WarpGroup::RigidRef;
        break;
      default:
        throw InapplicableModifier("absolute size does not constrain group '" +
                                   std::string(group_name(g)) + "'");
    }
  } else if (m.size == SizeSpec::Ratio) {
    if (shape.n_size_params != 2 || g != WarpGroup::SimAni)
      throw InapplicableModifier("aspect ratio needs a two-parameter shape");
    g = WarpGroup::SimRef;
  }

  if (m.orientation != Orientation::None) {
    switch (g) {
      case WarpGroup::SimRef:
        g = WarpGroup::Sim;
        break;
      case WarpGroup::RigidRef:
        g = WarpGroup::Rigid;
        break;
      default:
        throw InapplicableModifier("orientation does not constrain group '" +
                                   std::string(group_name(g)) + "'");
    }
  }
  return g;
}

BenchmarkTask make_task(const BaseShape& shape, const Modifiers& m) {
  BenchmarkTask t;
  t.shape_name = shape.name;
  t.group = modified_group(shape, m);
  t.modifiers = m;
  t.periods = shape.periods;
  t.prototype = oriented_prototype(shape, m.orientation);

  t.id = shape.name;
  if (m.size == SizeSpec::Absolute) t.id += "--abs";
  if (m.size == SizeSpec::Ratio) t.id += "--ratio";
  if (m.orientation == Orientation::Clockwise) t.id += "--cw";
  if (m.orientation == Orientation::CounterClockwise) t.id += "--ccw";
  t.prototype.id = t.id + "--prototype";

  t.prompt = "Animate the circle to move along a path shaped like a " +
             shape.name + size_phrase(shape, m.size) + ".";
  if (shape.periods > 0)
    t.prompt += " Complete " + std::to_string(shape.periods) +
                (shape.name == "archimedean-spiral" ? " turns" : " periods") +
                " of the " + shape.name + ".";
  if (m.orientation != Orientation::None)
    t.prompt += std::string(" Traverse the path in a ") +
                (m.orientation == Orientation::Clockwise ? "clockwise"
                                                         : "counterclockwise") +
                " manner.";
  return t;
}

std::vector<BenchmarkTask> build_tasks(const std::vector<BaseShape>& catalog,
                                       const ModifierGrid& grid) {
  std::vector<BenchmarkTask> tasks;
  int alternate = 0;

  for (const BaseShape& s : catalog) {
    if (grid.base) tasks.push_back(make_task(s, {}));

    if (grid.orientation && s.natural_group == WarpGroup::SimRef) {
      // Alternate the orientation across shapes to keep the grid compact
      // while exercising both traversal directions.
      const Orientation o = (alternate++ % 2 == 0) ? Orientation::CounterClockwise
                                                   : Orientation::Clockwise;
      tasks.push_back(make_task(s, {o, SizeSpec::None}));
    }

    if (grid.absolute_size && s.n_size_params >= 1)
      tasks.push_back(make_task(s, {Orientation::None, SizeSpec::Absolute}));

    if (grid.ratio_size && s.n_size_params == 2 &&
        s.natural_group == WarpGroup::SimAni)
      tasks.push_back(make_task(s, {Orientation::None, SizeSpec::Ratio}));

    if (grid.rigid_combo && s.natural_group == WarpGroup::SimRef &&
        s.n_size_params >= 1)
      tasks.push_back(
          make_task(s, {Orientation::CounterClockwise, SizeSpec::Absolute}));
  }
  return tasks;
}

}  // namespace trajsc::bench
