#pragma once

#include "shapeparts/dominant_sets.hpp"
#include "shapeparts/visibility.hpp"

#include <vector>

namespace shapeparts {

// Count of visibility edges with one endpoint in each set, computed by
// inclusion-exclusion on the unrestricted matrix: edges within the union
// minus edges within each part.
long long cross_visibility(const VisibilityMatrix& a,
                           const std::vector<Eigen::Index>& cluster_members,
                           const std::vector<Eigen::Index>& unassigned);

// Dissolves the kept cluster most visibility-entangled with the unassigned
// set: maximal cross-edge count, ties broken by cross edges per member, then
// by latest extraction order. A decomposition where every cluster has zero
// entanglement is returned unchanged. Removes at most one cluster.
Decomposition prune_weakest(const Decomposition& d, const VisibilityMatrix& a);

} // namespace shapeparts
