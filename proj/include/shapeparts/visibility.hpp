#pragma once

#include "shapeparts/contour.hpp"

#include <Eigen/Core>

namespace shapeparts {

// Binary symmetric matrix of mutually visible boundary point pairs, zero
// diagonal, consecutive points always visible.
struct VisibilityMatrix {
  Eigen::MatrixXi A;

  Eigen::Index size() const { return A.rows(); }
};

// Circulant band: T(i,j) = 1 iff the circular index distance
// min(|i-j|, N-|i-j|) is at most the radius. Unit diagonal.
struct NeighborhoodMask {
  Eigen::MatrixXi T;
  int radius = 0;
};

// Elementwise product of a visibility matrix and a neighborhood mask.
struct RestrictedVisibility {
  Eigen::MatrixXi A;
  int radius = 0;

  Eigen::Index size() const { return A.rows(); }
};

// s(n) for n = 1 .. floor(N/2): number of upper-triangle visibility entries
// whose index offset o satisfies o = n or N - o = n, each entry counted once.
struct OffDiagonalProfile {
  Eigen::VectorXi s;

  int count_at(int n) const { return s(n - 1); }
  Eigen::Index length() const { return s.size(); }
};

// Pair (i,j) is visible when the open segment between the points stays inside
// the closed region bounded by the contour; touching the boundary at the
// endpoints or along collinear edges is allowed. Coordinates are normalized
// to the unit box before any predicate runs.
VisibilityMatrix build_visibility_matrix(const Contour& c);

NeighborhoodMask neighborhood_mask(Eigen::Index n_points, int radius);

RestrictedVisibility restrict_visibility(const VisibilityMatrix& a,
                                         const NeighborhoodMask& mask);

OffDiagonalProfile off_diagonal_profile(const VisibilityMatrix& a);

// Smallest strict local minimum of the profile at or above ceil(N/20);
// falls back to floor(N/8) when the profile has none (convex shapes).
int estimate_radius(const OffDiagonalProfile& profile, Eigen::Index n_points);

} // namespace shapeparts
