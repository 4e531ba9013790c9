#pragma once

#include <map>
#include <vector>

#include "trajsc/icp.hpp"

namespace trajsc {

/// Cluster assignment for every trajectory of a distance matrix. With
/// min_samples = 1 DBSCAN never produces noise, so every index carries a
/// cluster id (singletons allowed). Ids are assigned in first-appearance
/// order; size ties break toward the lowest id.
struct ClusterLabeling {
  std::vector<int> labels;
  std::map<int, int> cluster_sizes;
  int largest_id = 0;

  std::vector<int> members_of(int cluster) const {
    std::vector<int> m;
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == cluster) m.push_back(static_cast<int>(i));
    return m;
  }
};

/// DBSCAN with eps = tau and min_samples = 1 over a precomputed matrix —
/// equivalently, connected components of the graph with edges where
/// D(i, j) ≤ tau. Throws InvalidMatrix on asymmetry beyond 1e-9, negative
/// entries, or a non-zero diagonal.
ClusterLabeling dbscan(const DistanceMatrix& d, double tau);

/// Member indices of the largest cluster (ties already resolved to the
/// lowest id by dbscan).
std::vector<int> largest_cluster(const ClusterLabeling& labeling);

/// The member with minimum mean distance to the other members; singletons
/// return their only member; ties break toward the lowest index.
int centroid_prototype(const std::vector<int>& members, const DistanceMatrix& d);

}  // namespace trajsc
