#include "trajsc/pipeline.hpp"

#include <algorithm>

#include "trajsc/errors.hpp"
#include "trajsc/random.hpp"

namespace trajsc {

std::optional<CriterionSpec> CriterionSpec::parse(const std::string& name) {
  CriterionSpec spec;
  if (name == "majority") spec.kind = Majority;
  else if (name == "hierarchical") spec.kind = Hierarchical;
  else if (name == "most") spec.kind = Most;
  else if (name == "least") spec.kind = Least;
  else if (name == "hierarchical_multi") spec.kind = HierarchicalMulti;
  else if (name.rfind("oracle:", 0) == 0) {
    const auto g = parse_group(name.substr(7));
    if (!g) return std::nullopt;
    spec.kind = Oracle;
    spec.oracle_group = *g;
  } else {
    return std::nullopt;
  }
  return spec;
}

std::string CriterionSpec::name() const {
  switch (kind) {
    case Majority: return "majority";
    case Hierarchical: return "hierarchical";
    case Most: return "most";
    case Least: return "least";
    case HierarchicalMulti: return "hierarchical_multi";
    case Oracle: return "oracle:" + std::string(group_name(oracle_group));
  }
  return "?";
}

CriterionOutcome apply_criterion(const CriterionSpec& spec,
                                 const HierarchyClusterings& hc) {
  switch (spec.kind) {
    case CriterionSpec::Majority: return majority_consensus(hc);
    case CriterionSpec::Hierarchical: return hierarchical_consistency(hc);
    case CriterionSpec::Most: return most_restrictive(hc);
    case CriterionSpec::Least: return least_restrictive(hc);
    case CriterionSpec::HierarchicalMulti:
      return hierarchical_consistency_multi(hc);
    case CriterionSpec::Oracle: {
      CriterionOutcome out;
      out.chosen_group = spec.oracle_group;
      const auto& gc = hc.at(spec.oracle_group);
      out.chosen_clusters = {largest_cluster(gc.labeling)};
      out.per_group_trace.push_back(
          {spec.oracle_group,
           gc.labeling.cluster_sizes.at(gc.labeling.largest_id), "oracle"});
      return out;
    }
  }
  throw Error("unknown criterion");
}

std::vector<ShapeFamily> families_from_outcome(
    const CriterionOutcome& outcome, const HierarchyClusterings& hc,
    const std::vector<Trajectory>& samples) {
  const GroupClustering& gc = hc.at(outcome.chosen_group);
  std::vector<ShapeFamily> families;
  families.reserve(outcome.chosen_clusters.size());
  for (const auto& cluster : outcome.chosen_clusters) {
    ShapeFamily f;
    f.group = outcome.chosen_group;
    f.tau = hc.tau;
    const int proto = centroid_prototype(cluster, gc.matrix);
    f.prototype = samples[proto];
    for (const int m : cluster) f.support.push_back(samples[m].id);
    families.push_back(std::move(f));
  }
  return families;
}

namespace {

// Oracle recovery only needs one group's clustering; the other entries stay
// empty and must not be touched.
HierarchyClusterings oracle_clusterings(const std::vector<Trajectory>& samples,
                                        WarpGroup g, double tau,
                                        const IcpConfig& cfg) {
  HierarchyClusterings hc;
  hc.tau = tau;
  GroupClustering& gc = hc.at(g);
  gc.matrix = pairwise_matrix(samples, g, cfg);
  gc.labeling = dbscan(gc.matrix, tau);
  return hc;
}

}  // namespace

std::vector<ShapeFamily> recover_families(const std::vector<Trajectory>& samples,
                                          const CriterionSpec& criterion,
                                          double tau, const IcpConfig& cfg) {
  if (samples.size() < 2) throw TooFewSamples("family recovery needs at least 2 samples");
  const HierarchyClusterings hc =
      criterion.kind == CriterionSpec::Oracle
          ? oracle_clusterings(samples, criterion.oracle_group, tau, cfg)
          : compute_hierarchy_clusterings(samples, tau, cfg);
  return families_from_outcome(apply_criterion(criterion, hc), hc, samples);
}

ShapeFamily recover_family(const std::vector<Trajectory>& samples,
                           const CriterionSpec& criterion, double tau,
                           const IcpConfig& cfg) {
  auto families = recover_families(samples, criterion, tau, cfg);
  return std::move(families.front());
}

const Trajectory& select_generation(const ShapeFamily& family) {
  return family.prototype;
}

VerificationVerdict verify(const ShapeFamily& family, const Trajectory& query,
                           const IcpConfig& cfg) {
  IcpConfig run_cfg = cfg;
  run_cfg.early_stop_tau = family.tau;
  VerificationVerdict v;
  v.distance = distance(family.prototype, query, family.group, run_cfg).distance;
  v.matched = v.distance <= family.tau;
  v.group = family.group;
  v.prototype_id = family.prototype.id;
  v.tau = family.tau;
  return v;
}

VerificationVerdict verify_any(const std::vector<ShapeFamily>& families,
                               const Trajectory& query, const IcpConfig& cfg) {
  VerificationVerdict best;
  best.distance = std::numeric_limits<double>::infinity();
  for (const ShapeFamily& f : families) {
    const VerificationVerdict v = verify(f, query, cfg);
    if (v.matched) return v;
    if (v.distance < best.distance) best = v;
  }
  return best;
}

namespace {

bool gt_member(const EvalTask& task, const Trajectory& t, double tau,
               const IcpConfig& cfg) {
  IcpConfig run_cfg = cfg;
  run_cfg.early_stop_tau = std::min(run_cfg.early_stop_tau, tau);
  run_cfg.rng_seed = derive_seed(cfg.rng_seed, task.gt_prototype.id, t.id);
  return distance(task.gt_prototype, t, task.gt_group, run_cfg).distance <= tau;
}

}  // namespace

EvalReport evaluate_generation(const std::vector<EvalTask>& tasks,
                               const CriterionSpec& criterion, double tau,
                               const IcpConfig& cfg) {
  if (tasks.empty()) throw Error("no tasks to evaluate");
  EvalReport report;
  double purity_sum = 0.0;
  int total_samples = 0, total_true = 0;

  for (const EvalTask& task : tasks) {
    const auto families = recover_families(task.samples, criterion, tau, cfg);

    int chosen = 0, chosen_true = 0;
    std::vector<bool> in_chosen(task.samples.size(), false);
    for (const auto& f : families)
      for (const auto& id : f.support)
        for (std::size_t i = 0; i < task.samples.size(); ++i)
          if (task.samples[i].id == id) in_chosen[i] = true;

    for (std::size_t i = 0; i < task.samples.size(); ++i) {
      const bool member = gt_member(task, task.samples[i], tau, cfg);
      ++total_samples;
      if (member) ++total_true;
      if (in_chosen[i]) {
        ++chosen;
        if (member) ++chosen_true;
      }
    }
    const double purity =
        chosen > 0 ? static_cast<double>(chosen_true) / chosen : 0.0;
    purity_sum += purity;
    report.per_task.push_back({task.id, families.front().group, purity});
  }

  report.accuracy = purity_sum / static_cast<double>(tasks.size());
  report.direct_accuracy =
      total_samples > 0 ? static_cast<double>(total_true) / total_samples : 0.0;
  return report;
}

EvalReport evaluate_verification(const std::vector<EvalTask>& tasks,
                                 const CriterionSpec& criterion, double tau,
                                 const IcpConfig& cfg) {
  if (tasks.empty()) throw Error("no tasks to evaluate");
  EvalReport report;
  int tp = 0, fp = 0, fn = 0;

  for (const EvalTask& task : tasks) {
    const auto families = recover_families(task.samples, criterion, tau, cfg);
    for (const auto& [query, truth] : task.queries) {
      IcpConfig q_cfg = cfg;
      q_cfg.rng_seed = derive_seed(cfg.rng_seed, "verify", query.id);
      const bool predicted = verify_any(families, query, q_cfg).matched;
      if (predicted && truth) ++tp;
      else if (predicted && !truth) ++fp;
      else if (!predicted && truth) ++fn;
    }
    report.per_task.push_back({task.id, families.front().group, 0.0});
  }

  report.precision = tp + fp > 0 ? static_cast<double>(tp) / (tp + fp) : 0.0;
  report.recall = tp + fn > 0 ? static_cast<double>(tp) / (tp + fn) : 0.0;
  report.f1 = report.precision + report.recall > 0.0
                  ? 2.0 * report.precision * report.recall /
                        (report.precision + report.recall)
                  : 0.0;
  return report;
}

}  // namespace trajsc
