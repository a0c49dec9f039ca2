#include "shapeparts/postprocess.hpp"

#include <algorithm>

namespace shapeparts {

namespace {

long long edges_within(const Eigen::MatrixXi& a,
                       const std::vector<Eigen::Index>& nodes) {
  long long count = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (a(nodes[i], nodes[j]) != 0) ++count;
  return count;
}

} // namespace

long long cross_visibility(const VisibilityMatrix& a,
                           const std::vector<Eigen::Index>& cluster_members,
                           const std::vector<Eigen::Index>& unassigned) {
  std::vector<Eigen::Index> both = cluster_members;
  both.insert(both.end(), unassigned.begin(), unassigned.end());
  return edges_within(a.A, both) - edges_within(a.A, cluster_members) -
         edges_within(a.A, unassigned);
}

Decomposition prune_weakest(const Decomposition& d, const VisibilityMatrix& a) {
  if (d.clusters.empty()) return d;

  std::size_t best = 0;
  long long best_q = -1;
  double best_per_member = -1.0;
  for (std::size_t c = 0; c < d.clusters.size(); ++c) {
    const auto members = d.clusters[c].members(d.n_points);
    const long long q = cross_visibility(a, members, d.unassigned);
    const double per_member = static_cast<double>(q) /
                              static_cast<double>(members.size());
    // Later extraction wins remaining ties, hence >=.
    if (q > best_q ||
        (q == best_q && per_member >= best_per_member)) {
      best = c;
      best_q = q;
      best_per_member = per_member;
    }
  }
  if (best_q <= 0) return d; // nothing entangled with the unassigned set

  Decomposition out;
  out.n_points = d.n_points;
  out.unassigned = d.unassigned;
  for (std::size_t c = 0; c < d.clusters.size(); ++c) {
    if (c == best) {
      const auto members = d.clusters[c].members(d.n_points);
      out.unassigned.insert(out.unassigned.end(), members.begin(),
                            members.end());
    } else {
      out.clusters.push_back(d.clusters[c]);
    }
  }
  std::sort(out.unassigned.begin(), out.unassigned.end());
  return out;
}

} // namespace shapeparts
