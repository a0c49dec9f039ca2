#pragma once

#include "shapeparts/visibility.hpp"

#include <Eigen/Core>

namespace shapeparts {

// Weighted symmetric matrix of two-step path counts with zero diagonal;
// entry (i,j) is the number of common neighbors of i and j in the restricted
// visibility graph.
struct DiffusionMatrix {
  Eigen::MatrixXi D;
  int radius = 0;

  Eigen::Index size() const { return D.rows(); }
};

// Square of the restricted visibility matrix, main diagonal zeroed. When
// include_direct_edges is set, the direct edges are added back on top of the
// two-step counts (off by default).
DiffusionMatrix diffuse(const RestrictedVisibility& a_n,
                        bool include_direct_edges = false);

} // namespace shapeparts
