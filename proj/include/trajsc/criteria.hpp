#pragma once

#include <array>
#include <string>
#include <vector>

#include "trajsc/clustering.hpp"

namespace trajsc {

struct GroupClustering {
  DistanceMatrix matrix;
  ClusterLabeling labeling;
};

/// Per-group distance matrices and clusterings over one trajectory list at
/// a shared τ, one entry per group of the hierarchy.
struct HierarchyClusterings {
  std::array<GroupClustering, kNumGroups> groups;
  double tau = 0.5;

  const GroupClustering& at(WarpGroup g) const {
    return groups[static_cast<int>(g)];
  }
  GroupClustering& at(WarpGroup g) { return groups[static_cast<int>(g)]; }
  int sample_count() const {
    return static_cast<int>(groups[0].labeling.labels.size());
  }
};

struct TraceEntry {
  WarpGroup group;
  int largest_size = 0;
  std::string decision;
};

/// Result of a group-selection criterion. chosen_clusters has length 1
/// except for the multi-prototype variant; the trace records every group
/// the criterion examined.
struct CriterionOutcome {
  WarpGroup chosen_group = WarpGroup::Affine;
  std::vector<std::vector<int>> chosen_clusters;
  std::vector<TraceEntry> per_group_trace;
};

/// pairwise_matrix + dbscan for each of the six groups.
HierarchyClusterings compute_hierarchy_clusterings(
    const std::vector<Trajectory>& ts, double tau, const IcpConfig& cfg);

/// Ascends Rigid → Affine and returns the first group whose largest cluster
/// strictly exceeds half the samples; falls back to Affine's largest
/// cluster when no group reaches a majority.
CriterionOutcome majority_consensus(const HierarchyClusterings& hc);

/// Descends Affine → SimAni → SimRef → Sim → RigidRef → Rigid, tracking the
/// members of Affine's largest cluster; descends while the tracked set stays
/// inside a single cluster of the more restrictive group (adopting that
/// cluster), and stops at the last group where it remained intact.
CriterionOutcome hierarchical_consistency(const HierarchyClusterings& hc);

/// Baselines: unconditionally Rigid (resp. Affine) with its largest cluster.
CriterionOutcome most_restrictive(const HierarchyClusterings& hc);
CriterionOutcome least_restrictive(const HierarchyClusterings& hc);

/// Multi-prototype variant of the descent: tracks every Affine-level
/// cluster whose size is within size_tolerance of the largest, descends
/// while each of them stays intact, and returns all of them at the stop.
CriterionOutcome hierarchical_consistency_multi(const HierarchyClusterings& hc,
                                                double size_tolerance = 0.20);

}  // namespace trajsc
