#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trajsc/criteria.hpp"

namespace trajsc {

/// A recovered shape family: every trajectory reachable from the prototype
/// by a warp of the group, thresholded at tau in practice.
struct ShapeFamily {
  Trajectory prototype;
  WarpGroup group = WarpGroup::SimRef;
  std::vector<std::string> support;  // ids of the cluster members
  double tau = 0.5;
};

struct VerificationVerdict {
  bool matched = false;
  double distance = 0.0;
  WarpGroup group = WarpGroup::SimRef;
  std::string prototype_id;
  double tau = 0.5;
};

/// Group-selection strategy for family recovery. Oracle bypasses the
/// cluster statistics and clusters under the given group directly.
struct CriterionSpec {
  enum Kind { Majority, Hierarchical, Most, Least, HierarchicalMulti, Oracle };
  Kind kind = Hierarchical;
  WarpGroup oracle_group = WarpGroup::SimRef;

  /// Parses "majority", "hierarchical", "most", "least",
  /// "hierarchical_multi", or "oracle:<group>".
  static std::optional<CriterionSpec> parse(const std::string& name);
  std::string name() const;
};

/// Applies the criterion to precomputed clusterings (for Oracle, picks the
/// oracle group's largest cluster directly).
CriterionOutcome apply_criterion(const CriterionSpec& spec,
                                 const HierarchyClusterings& hc);

/// One family per chosen cluster: centroid-prototype member, member ids as
/// support, recovery tau.
std::vector<ShapeFamily> families_from_outcome(
    const CriterionOutcome& outcome, const HierarchyClusterings& hc,
    const std::vector<Trajectory>& samples);

/// End-to-end recovery: clusters the samples across the hierarchy (or only
/// under the oracle group), applies the criterion, and selects centroid
/// prototypes. Single-cluster criteria yield one family; the
/// multi-prototype variant may yield several.
std::vector<ShapeFamily> recover_families(const std::vector<Trajectory>& samples,
                                          const CriterionSpec& criterion,
                                          double tau, const IcpConfig& cfg);

/// recover_families for criteria that produce exactly one family.
ShapeFamily recover_family(const std::vector<Trajectory>& samples,
                           const CriterionSpec& criterion, double tau,
                           const IcpConfig& cfg);

/// The most self-consistent generation: the family prototype (the centroid
/// member of the chosen cluster).
const Trajectory& select_generation(const ShapeFamily& family);

/// Membership check: matched iff the warp-invariant distance between the
/// family prototype and the query is at most the family's tau.
VerificationVerdict verify(const ShapeFamily& family, const Trajectory& query,
                           const IcpConfig& cfg);

/// A query matches a multi-prototype family if it matches any member family.
VerificationVerdict verify_any(const std::vector<ShapeFamily>& families,
                               const Trajectory& query, const IcpConfig& cfg);

/// One benchmark task as the evaluation operations see it.
struct EvalTask {
  std::string id;
  std::vector<Trajectory> samples;
  Trajectory gt_prototype;
  WarpGroup gt_group = WarpGroup::SimRef;
  std::vector<std::pair<Trajectory, bool>> queries;  // empty for generation
};

struct TaskEval {
  std::string task_id;
  WarpGroup chosen_group = WarpGroup::SimRef;
  double purity = 0.0;  // true fraction inside the chosen cluster(s)
};

struct EvalReport {
  double accuracy = 0.0;         // mean purity across tasks
  double direct_accuracy = 0.0;  // true fraction over all samples (baseline)
  double precision = 0.0, recall = 0.0, f1 = 0.0;
  std::vector<TaskEval> per_task;
};

/// Generation metric: per task, recovers a family, labels each chosen
/// member by a ground-truth membership check (distance to the ground-truth
/// prototype under the ground-truth group at tau), and averages the true
/// fraction across tasks. The direct baseline scores all samples the same
/// way.
EvalReport evaluate_generation(const std::vector<EvalTask>& tasks,
                               const CriterionSpec& criterion, double tau,
                               const IcpConfig& cfg);

/// Verification metric: recovers families per task, verifies each query,
/// and pools precision/recall/F1 against the ground-truth labels. Undefined
/// precision/recall count as 0; F1 is 0 when both are.
EvalReport evaluate_verification(const std::vector<EvalTask>& tasks,
                                 const CriterionSpec& criterion, double tau,
                                 const IcpConfig& cfg);

}  // namespace trajsc
