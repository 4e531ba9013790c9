#pragma once

#include <string>
#include <vector>

#include "trajsc/clustering.hpp"
#include "trajsc/trajectory.hpp"

namespace trajsc::io {

/// Rendering conventions: each trajectory lives in a 400×400 px panel,
/// drawn as 4-px dots whose color interpolates blue (start) → red (end)
/// over a faint connecting polyline. One dot and one polyline vertex per
/// trajectory point.
struct RenderOptions {
  int resample = 0;       // resample to this many points first; 0 keeps input
  double cell = 160.0;    // rendered panel size (the panel scales 400 px down)
  int columns = 6;
};

/// Panels laid out in a grid, one per trajectory.
std::string render_trajectories_svg(const std::vector<Trajectory>& ts,
                                    const RenderOptions& opts = {});

/// Panels grouped by cluster (one labeled row block per cluster id);
/// clusters listed in `highlighted` get the green border that marks the
/// chosen cluster.
std::string render_clusters_svg(const std::vector<Trajectory>& ts,
                                const ClusterLabeling& labeling,
                                const std::vector<int>& highlighted,
                                const RenderOptions& opts = {});

}  // namespace trajsc::io
