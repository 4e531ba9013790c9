#include "trajsc/criteria.hpp"

#include <algorithm>
#include <set>

#include "trajsc/errors.hpp"

namespace trajsc {

namespace {

int largest_size(const GroupClustering& gc) {
  return gc.labeling.cluster_sizes.at(gc.labeling.largest_id);
}

// Descent order: reverse of the linearization.
constexpr std::array<WarpGroup, kNumGroups> kDescent = {
    WarpGroup::Affine, WarpGroup::SimAni,   WarpGroup::SimRef,
    WarpGroup::Sim,    WarpGroup::RigidRef, WarpGroup::Rigid};

// Cluster id containing all of `members` at this level, or -1 if they span
// more than one cluster.
int containing_cluster(const ClusterLabeling& labeling,
                       const std::vector<int>& members) {
  int id = labeling.labels[members.front()];
  for (const int m : members)
    if (labeling.labels[m] != id) return -1;
  return id;
}

}  // namespace

HierarchyClusterings compute_hierarchy_clusterings(
    const std::vector<Trajectory>& ts, double tau, const IcpConfig& cfg) {
  if (ts.size() < 2) throw TooFewSamples("need at least 2 trajectories");
  HierarchyClusterings hc;
  hc.tau = tau;
  for (const WarpGroup g : all_groups()) {
    GroupClustering& gc = hc.at(g);
    gc.matrix = pairwise_matrix(ts, g, cfg);
    gc.labeling = dbscan(gc.matrix, tau);
  }
  return hc;
}

CriterionOutcome majority_consensus(const HierarchyClusterings& hc) {
  const int n = hc.sample_count();
  CriterionOutcome out;
  for (const WarpGroup g : all_groups()) {
    const int size = largest_size(hc.at(g));
    if (2 * size > n) {
      out.per_group_trace.push_back({g, size, "majority"});
      out.chosen_group = g;
      out.chosen_clusters = {largest_cluster(hc.at(g).labeling)};
      return out;
    }
    out.per_group_trace.push_back({g, size, "no-majority"});
  }
  // No majority anywhere: degrade to the least restrictive group.
  out.chosen_group = WarpGroup::Affine;
  out.chosen_clusters = {largest_cluster(hc.at(WarpGroup::Affine).labeling)};
  out.per_group_trace.push_back(
      {WarpGroup::Affine, largest_size(hc.at(WarpGroup::Affine)), "fallback"});
  return out;
}

CriterionOutcome hierarchical_consistency(const HierarchyClusterings& hc) {
  CriterionOutcome out;
  std::vector<int> ref = largest_cluster(hc.at(WarpGroup::Affine).labeling);
  out.chosen_group = WarpGroup::Affine;
  out.per_group_trace.push_back(
      {WarpGroup::Affine, static_cast<int>(ref.size()), "start"});

  for (std::size_t level = 1; level < kDescent.size(); ++level) {
    const WarpGroup g = kDescent[level];
    const int id = containing_cluster(hc.at(g).labeling, ref);
    if (id < 0) {
      out.per_group_trace.push_back(
          {g, largest_size(hc.at(g)), "split-stop"});
      break;
    }
    ref = hc.at(g).labeling.members_of(id);
    out.chosen_group = g;
    out.per_group_trace.push_back({g, static_cast<int>(ref.size()), "intact"});
  }
  out.chosen_clusters = {std::move(ref)};
  return out;
}

CriterionOutcome most_restrictive(const HierarchyClusterings& hc) {
  CriterionOutcome out;
  out.chosen_group = WarpGroup::Rigid;
  out.chosen_clusters = {largest_cluster(hc.at(WarpGroup::Rigid).labeling)};
  out.per_group_trace.push_back(
      {WarpGroup::Rigid, largest_size(hc.at(WarpGroup::Rigid)), "always"});
  return out;
}

CriterionOutcome least_restrictive(const HierarchyClusterings& hc) {
  CriterionOutcome out;
  out.chosen_group = WarpGroup::Affine;
  out.chosen_clusters = {largest_cluster(hc.at(WarpGroup::Affine).labeling)};
  out.per_group_trace.push_back(
      {WarpGroup::Affine, largest_size(hc.at(WarpGroup::Affine)), "always"});
  return out;
}

CriterionOutcome hierarchical_consistency_multi(const HierarchyClusterings& hc,
                                                double size_tolerance) {
  const ClusterLabeling& top = hc.at(WarpGroup::Affine).labeling;
  const int max_size = top.cluster_sizes.at(top.largest_id);
  const double floor = (1.0 - size_tolerance) * max_size;

  std::vector<std::vector<int>> refs;
  for (const auto& [id, size] : top.cluster_sizes)
    if (static_cast<double>(size) >= floor) refs.push_back(top.members_of(id));

  CriterionOutcome out;
  out.chosen_group = WarpGroup::Affine;
  out.per_group_trace.push_back({WarpGroup::Affine, max_size,
                                 "start(" + std::to_string(refs.size()) + ")"});

  for (std::size_t level = 1; level < kDescent.size(); ++level) {
    const WarpGroup g = kDescent[level];
    const ClusterLabeling& labeling = hc.at(g).labeling;
    std::set<int> ids;
    bool intact = true;
    for (const auto& ref : refs) {
      const int id = containing_cluster(labeling, ref);
      if (id < 0) {
        intact = false;
        break;
      }
      ids.insert(id);
    }
    if (!intact) {
      out.per_group_trace.push_back({g, largest_size(hc.at(g)), "split-stop"});
      break;
    }
    refs.clear();
    for (const int id : ids) refs.push_back(labeling.members_of(id));
    out.chosen_group = g;
    out.per_group_trace.push_back(
        {g, largest_size(hc.at(g)),
         "intact(" + std::to_string(refs.size()) + ")"});
  }
  out.chosen_clusters = std::move(refs);
  return out;
}

}  // namespace trajsc
