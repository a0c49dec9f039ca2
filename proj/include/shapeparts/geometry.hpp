#pragma once

#include <Eigen/Core>

#include <utility>

namespace shapeparts {

using Point = Eigen::Vector2d;
using PointMatrix = Eigen::Matrix2Xd; // one column per point

// Orientation tests run on coordinates normalized to the unit box; this
// epsilon is calibrated for that scale.
inline constexpr double kGeomEps = 1e-12;

// z-component of (a-o) x (b-o).
inline double cross2(const Point& o, const Point& a, const Point& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// -1, 0, +1 for clockwise, collinear (within eps), counterclockwise.
inline int orientation_sign(const Point& o, const Point& a, const Point& b,
                            double eps = kGeomEps) {
  const double c = cross2(o, a, b);
  if (c > eps) return 1;
  if (c < -eps) return -1;
  return 0;
}

bool point_on_segment(const Point& p, const Point& a, const Point& b,
                      double eps = kGeomEps);

// Transversal crossing at interior points of both segments.
bool segments_cross_properly(const Point& p1, const Point& p2, const Point& q1,
                             const Point& q2, double eps = kGeomEps);

// Inside-or-on test for the closed polygon whose vertices are the columns of
// pts (implicitly closed last-to-first).
bool point_in_polygon(const PointMatrix& pts, const Point& p,
                      double eps = kGeomEps);

// Translate and uniformly scale the points into [0,1]^2. Exact for inputs
// related by integer translation or power-of-two scaling.
PointMatrix normalize_to_unit_box(const PointMatrix& pts);

double signed_area(const PointMatrix& pts);
double perimeter(const PointMatrix& pts);

// Pairwise edge sweep; eps applies to intersection parameters. When the
// polygon is not simple, offending holds the indices of a touching edge pair.
bool is_simple_polygon(const PointMatrix& pts,
                       std::pair<Eigen::Index, Eigen::Index>* offending = nullptr,
                       double eps = 1e-9);

} // namespace shapeparts
