#include "shapeparts/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace shapeparts {

bool point_on_segment(const Point& p, const Point& a, const Point& b,
                      double eps) {
  if (std::abs(cross2(a, b, p)) > eps) return false;
  const Point ab = b - a;
  const double t = (p - a).dot(ab);
  return t >= -eps && t <= ab.squaredNorm() + eps;
}

bool segments_cross_properly(const Point& p1, const Point& p2, const Point& q1,
                             const Point& q2, double eps) {
  const int o1 = orientation_sign(p1, p2, q1, eps);
  const int o2 = orientation_sign(p1, p2, q2, eps);
  const int o3 = orientation_sign(q1, q2, p1, eps);
  const int o4 = orientation_sign(q1, q2, p2, eps);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

bool point_in_polygon(const PointMatrix& pts, const Point& p, double eps) {
  const Eigen::Index n = pts.cols();
  for (Eigen::Index i = 0, j = n - 1; i < n; j = i++) {
    if (point_on_segment(p, pts.col(j), pts.col(i), eps)) return true;
  }
  // Crossing number with a half-open edge rule so vertices count once.
  bool inside = false;
  for (Eigen::Index i = 0, j = n - 1; i < n; j = i++) {
    const Point a = pts.col(i);
    const Point b = pts.col(j);
    if ((a.y() > p.y()) != (b.y() > p.y())) {
      const double x_int =
          a.x() + (p.y() - a.y()) * (b.x() - a.x()) / (b.y() - a.y());
      if (p.x() < x_int) inside = !inside;
    }
  }
  return inside;
}

PointMatrix normalize_to_unit_box(const PointMatrix& pts) {
  const Point lo = pts.rowwise().minCoeff();
  const Point hi = pts.rowwise().maxCoeff();
  const double extent = std::max(hi.x() - lo.x(), hi.y() - lo.y());
  const double scale = extent > 0 ? 1.0 / extent : 1.0;
  return (pts.colwise() - lo) * scale;
}

double signed_area(const PointMatrix& pts) {
  const Eigen::Index n = pts.cols();
  double twice = 0.0;
  for (Eigen::Index i = 0, j = n - 1; i < n; j = i++) {
    twice += pts(0, j) * pts(1, i) - pts(0, i) * pts(1, j);
  }
  return 0.5 * twice;
}

double perimeter(const PointMatrix& pts) {
  const Eigen::Index n = pts.cols();
  double len = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    len += (pts.col((i + 1) % n) - pts.col(i)).norm();
  }
  return len;
}

namespace {

// Intersection of closed segments in parameter space. Collinear overlap
// counts as touching.
bool segments_touch_params(const Point& p1, const Point& p2, const Point& q1,
                           const Point& q2, double eps) {
  const Point r = p2 - p1;
  const Point s = q2 - q1;
  const double denom = r.x() * s.y() - r.y() * s.x();
  const Point qp = q1 - p1;
  const double scale = std::max({r.norm(), s.norm(), 1e-300});
  if (std::abs(denom) > eps * scale * scale) {
    const double t = (qp.x() * s.y() - qp.y() * s.x()) / denom;
    const double u = (qp.x() * r.y() - qp.y() * r.x()) / denom;
    return t >= -eps && t <= 1.0 + eps && u >= -eps && u <= 1.0 + eps;
  }
  // Near-parallel: touching only if collinear and the 1D ranges overlap.
  if (std::abs(qp.x() * r.y() - qp.y() * r.x()) > eps * scale * scale)
    return false;
  const double rr = r.squaredNorm();
  if (rr == 0.0) return point_on_segment(p1, q1, q2, eps * scale);
  double t0 = (q1 - p1).dot(r) / rr;
  double t1 = (q2 - p1).dot(r) / rr;
  if (t0 > t1) std::swap(t0, t1);
  return t1 >= -eps && t0 <= 1.0 + eps;
}

} // namespace

bool is_simple_polygon(const PointMatrix& pts,
                       std::pair<Eigen::Index, Eigen::Index>* offending,
                       double eps) {
  const Eigen::Index n = pts.cols();
  if (n < 3) return false;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point a1 = pts.col(i);
    const Point a2 = pts.col((i + 1) % n);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const Point b1 = pts.col(j);
      const Point b2 = pts.col((j + 1) % n);
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) {
        // Edges sharing a vertex may only meet at that vertex; a collinear
        // overlap is a spike.
        const Point shared = (j == i + 1) ? a2 : a1;
        const Point tip_a = (j == i + 1) ? a1 : a2;
        const Point tip_b = (j == i + 1) ? b2 : b1;
        const double la = (tip_a - shared).norm();
        const double lb = (tip_b - shared).norm();
        if (la == 0.0 || lb == 0.0 ||
            (std::abs(cross2(shared, tip_a, tip_b)) <= eps * la * lb &&
             (tip_a - shared).dot(tip_b - shared) > 0)) {
          if (offending) *offending = {i, j};
          return false;
        }
        continue;
      }
      if (segments_touch_params(a1, a2, b1, b2, eps)) {
        if (offending) *offending = {i, j};
        return false;
      }
    }
  }
  return true;
}

} // namespace shapeparts
