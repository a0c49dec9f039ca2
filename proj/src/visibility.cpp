#include "shapeparts/visibility.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace shapeparts {

namespace {

// The open segment between vertices i and j lies inside the closed polygon.
// A proper crossing with any non-incident edge rules it out immediately; the
// remaining failure mode is an excursion through a vertex, caught by testing
// the midpoint of every sub-segment between consecutive boundary touches.
bool segment_inside(const PointMatrix& pts, Eigen::Index i, Eigen::Index j) {
  const Eigen::Index n = pts.cols();
  const Point p = pts.col(i);
  const Point q = pts.col(j);

  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index k2 = (k + 1) % n;
    if (k == i || k == j || k2 == i || k2 == j) continue;
    if (segments_cross_properly(p, q, pts.col(k), pts.col(k2))) return false;
  }

  std::vector<double> ts{0.0, 1.0};
  const Point pq = q - p;
  const double len2 = pq.squaredNorm();
  for (Eigen::Index v = 0; v < n; ++v) {
    if (v == i || v == j) continue;
    if (!point_on_segment(pts.col(v), p, q)) continue;
    const double t = (pts.col(v) - p).dot(pq) / len2;
    if (t > kGeomEps && t < 1.0 - kGeomEps) ts.push_back(t);
  }
  std::sort(ts.begin(), ts.end());

  for (std::size_t s = 0; s + 1 < ts.size(); ++s) {
    if (ts[s + 1] - ts[s] <= kGeomEps) continue;
    const Point mid = p + (0.5 * (ts[s] + ts[s + 1])) * pq;
    if (!point_in_polygon(pts, mid)) return false;
  }
  return true;
}

} // namespace

VisibilityMatrix build_visibility_matrix(const Contour& c) {
  const Eigen::Index n = c.size();
  const PointMatrix pts = normalize_to_unit_box(c.points);
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      const bool vis = adjacent || segment_inside(pts, i, j);
      a(i, j) = a(j, i) = vis ? 1 : 0;
    }
  }
  return VisibilityMatrix{std::move(a)};
}

NeighborhoodMask neighborhood_mask(Eigen::Index n_points, int radius) {
  const int max_radius = static_cast<int>(n_points / 2) - 1;
  if (radius < 1 || radius > max_radius) {
    throw std::invalid_argument("neighborhood radius " +
                                std::to_string(radius) + " outside [1, " +
                                std::to_string(max_radius) + "] for N = " +
                                std::to_string(n_points));
  }
  Eigen::MatrixXi t(n_points, n_points);
  for (Eigen::Index i = 0; i < n_points; ++i) {
    for (Eigen::Index j = 0; j < n_points; ++j) {
      const Eigen::Index d = std::abs(i - j);
      const Eigen::Index circ = std::min(d, n_points - d);
      t(i, j) = circ <= radius ? 1 : 0;
    }
  }
  return NeighborhoodMask{std::move(t), radius};
}

RestrictedVisibility restrict_visibility(const VisibilityMatrix& a,
                                         const NeighborhoodMask& mask) {
  if (a.A.rows() != mask.T.rows())
    throw std::invalid_argument("visibility matrix and mask dimensions differ");
  return RestrictedVisibility{a.A.cwiseProduct(mask.T), mask.radius};
}

OffDiagonalProfile off_diagonal_profile(const VisibilityMatrix& a) {
  const Eigen::Index n = a.size();
  const Eigen::Index half = n / 2;
  // Per-offset upper-triangle sums; offset o and its mirror N-o pool into the
  // same s(n) except at the self-mirrored offset N/2.
  std::vector<int> offset_count(static_cast<std::size_t>(n), 0);
  for (Eigen::Index o = 1; o < n; ++o) {
    int cnt = 0;
    for (Eigen::Index i = 0; i + o < n; ++i) cnt += a.A(i, i + o);
    offset_count[o] = cnt;
  }
  Eigen::VectorXi s(half);
  for (Eigen::Index m = 1; m <= half; ++m) {
    int total = offset_count[m];
    if (n - m != m) total += offset_count[n - m];
    s(m - 1) = total;
  }
  return OffDiagonalProfile{std::move(s)};
}

int estimate_radius(const OffDiagonalProfile& profile, Eigen::Index n_points) {
  if (profile.length() < 4)
    throw std::invalid_argument("off-diagonal profile too short");
  const int half = static_cast<int>(n_points / 2);
  const int n_min = static_cast<int>((n_points + 19) / 20); // ceil(N/20)
  for (int n = std::max(n_min, 2); n <= half - 1; ++n) {
    if (profile.count_at(n) < profile.count_at(n - 1) &&
        profile.count_at(n) < profile.count_at(n + 1)) {
      return n;
    }
  }
  const int fallback = static_cast<int>(n_points / 8);
  return std::clamp(fallback, 1, half - 1);
}

} // namespace shapeparts
