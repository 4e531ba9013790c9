#include "trajsc/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "trajsc/errors.hpp"

namespace trajsc {

ClusterLabeling dbscan(const DistanceMatrix& d, double tau) {
  const Eigen::Index n = d.values.rows();
  if (n == 0 || d.values.cols() != n) throw InvalidMatrix("matrix must be square and non-empty");
  if (tau <= 0.0) throw InvalidMatrix("tau must be positive");
  for (Eigen::Index i = 0; i < n; ++i) {
    if (d.values(i, i) != 0.0) throw InvalidMatrix("diagonal must be zero");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double a = d.values(i, j), b = d.values(j, i);
      if (a < 0.0 || b < 0.0 || !std::isfinite(a) || !std::isfinite(b))
        throw InvalidMatrix("entries must be finite and non-negative");
      if (std::abs(a - b) > 1e-9) throw InvalidMatrix("matrix is not symmetric");
    }
  }

  ClusterLabeling out;
  out.labels.assign(n, -1);
  int next_id = 0;
  std::vector<Eigen::Index> stack;
  for (Eigen::Index seed = 0; seed < n; ++seed) {
    if (out.labels[seed] != -1) continue;
    const int id = next_id++;
    stack.assign(1, seed);
    out.labels[seed] = id;
    while (!stack.empty()) {
      const Eigen::Index i = stack.back();
      stack.pop_back();
      for (Eigen::Index j = 0; j < n; ++j) {
        if (out.labels[j] == -1 && d.values(i, j) <= tau) {
          out.labels[j] = id;
          stack.push_back(j);
        }
      }
    }
  }

  for (const int label : out.labels) out.cluster_sizes[label]++;
  int best_size = 0;
  for (const auto& [id, size] : out.cluster_sizes) {
    if (size > best_size) {  // map iterates ids ascending: ties keep lowest
      best_size = size;
      out.largest_id = id;
    }
  }
  return out;
}

std::vector<int> largest_cluster(const ClusterLabeling& labeling) {
  return labeling.members_of(labeling.largest_id);
}

int centroid_prototype(const std::vector<int>& members_in, const DistanceMatrix& d) {
  if (members_in.empty()) throw Error("centroid of an empty member set");
  std::vector<int> members = members_in;
  std::sort(members.begin(), members.end());
  int best = members.front();
  double best_mean = std::numeric_limits<double>::infinity();
  for (const int i : members) {
    double sum = 0.0;
    for (const int j : members)
      if (j != i) sum += d.values(i, j);
    const double mean =
        members.size() > 1 ? sum / static_cast<double>(members.size() - 1) : 0.0;
    if (mean < best_mean) {  // strict: ties keep the lowest index seen first
      best_mean = mean;
      best = i;
    }
  }
  return best;
}

}  // namespace trajsc
