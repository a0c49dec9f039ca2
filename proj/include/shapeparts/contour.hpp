#pragma once

#include "shapeparts/geometry.hpp"

#include <iosfwd>
#include <string>

namespace shapeparts {

// Closed planar boundary, one column per point, counterclockwise, without a
// repeated closing point.
struct Contour {
  PointMatrix points;

  Eigen::Index size() const { return points.cols(); }
};

enum class ContourFormat { Csv, Json };

// Validates and canonicalizes a point sequence: drops exactly coincident
// consecutive points and a repeated terminal point, requires at least three
// distinct points and a simple polygon, and flips orientation to
// counterclockwise keeping the first point first.
Contour make_contour(PointMatrix points);

// CSV: one "x,y" line per point, optional "x,y" header.
// JSON: {"points": [[x,y], ...]}.
Contour load_contour(std::istream& in, ContourFormat format);
Contour load_contour_file(const std::string& path); // format from extension

void save_contour(const Contour& c, std::ostream& out, ContourFormat format);

// Exactly target_count points at equal arc-length intervals along the closed
// perimeter, starting at the original first point, linearly interpolated
// along the edges. Throws if the result self-intersects.
Contour resample_uniform(const Contour& c, Eigen::Index target_count);

} // namespace shapeparts
