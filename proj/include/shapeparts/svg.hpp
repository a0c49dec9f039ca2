#pragma once

#include "shapeparts/contour.hpp"
#include "shapeparts/dominant_sets.hpp"

#include <iosfwd>

namespace shapeparts {

// Standalone vector rendering: contour polyline, points colored by cluster
// from a fixed 12-color palette (reused past 12 clusters), unassigned points
// in gray, and a legend with cohesiveness values.
void render_svg(const Contour& c, const Decomposition& d, std::ostream& out);

} // namespace shapeparts
