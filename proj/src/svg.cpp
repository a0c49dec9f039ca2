#include "shapeparts/svg.hpp"

#include <array>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

namespace shapeparts {

namespace {

constexpr std::array<const char*, 12> kPalette = {
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46b8b0",
    "#f032e6", "#9a6324", "#808000", "#008080", "#bf5b17", "#666633"};
constexpr const char* kUnassigned = "#999999";

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

} // namespace

void render_svg(const Contour& c, const Decomposition& d, std::ostream& out) {
  const Eigen::Index n = c.size();
  const Point lo = c.points.rowwise().minCoeff();
  const Point hi = c.points.rowwise().maxCoeff();
  const double extent = std::max(hi.x() - lo.x(), hi.y() - lo.y());
  const double pad = 0.06 * extent;
  const double scale = 720.0 / (extent + 2 * pad);
  const double legend_width = 190.0;
  const double width = (hi.x() - lo.x() + 2 * pad) * scale + legend_width;
  const double height =
      std::max((hi.y() - lo.y() + 2 * pad) * scale, 40.0 + 18.0 * (d.clusters.size() + 1));

  // SVG y grows downward.
  const auto sx = [&](double x) { return (x - lo.x() + pad) * scale; };
  const auto sy = [&](double y) { return (hi.y() - y + pad) * scale; };

  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (std::size_t k = 0; k < d.clusters.size(); ++k)
    for (const Eigen::Index i : d.clusters[k].members(n))
      color[static_cast<std::size_t>(i)] =
          static_cast<int>(k % kPalette.size());

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
      << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width)
      << ' ' << fmt(height) << "\">\n";

  out << "  <polygon fill=\"none\" stroke=\"#333333\" stroke-width=\"1\" points=\"";
  for (Eigen::Index i = 0; i < n; ++i) {
    if (i) out << ' ';
    out << fmt(sx(c.points(0, i))) << ',' << fmt(sy(c.points(1, i)));
  }
  out << "\"/>\n";

  const double r = std::max(2.0, 240.0 / static_cast<double>(n) + 1.5);
  for (Eigen::Index i = 0; i < n; ++i) {
    const int k = color[static_cast<std::size_t>(i)];
    out << "  <circle cx=\"" << fmt(sx(c.points(0, i))) << "\" cy=\""
        << fmt(sy(c.points(1, i))) << "\" r=\"" << fmt(r) << "\" fill=\""
        << (k < 0 ? kUnassigned : kPalette[static_cast<std::size_t>(k)])
        << "\"/>\n";
  }

  const double lx = width - legend_width + 12.0;
  double ly = 24.0;
  for (std::size_t k = 0; k < d.clusters.size(); ++k) {
    const char* col = kPalette[k % kPalette.size()];
    out << "  <rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly - 9.0)
        << "\" width=\"10\" height=\"10\" fill=\"" << col << "\"/>\n";
    out << "  <text x=\"" << fmt(lx + 16.0) << "\" y=\"" << fmt(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\">cluster " << k
        << "  n=" << d.clusters[k].length
        << "  J=" << fmt(d.clusters[k].cohesiveness) << "</text>\n";
    ly += 18.0;
  }
  out << "  <rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly - 9.0)
      << "\" width=\"10\" height=\"10\" fill=\"" << kUnassigned << "\"/>\n";
  out << "  <text x=\"" << fmt(lx + 16.0) << "\" y=\"" << fmt(ly)
      << "\" font-family=\"sans-serif\" font-size=\"12\">unassigned  n="
      << d.unassigned.size() << "</text>\n";
  out << "</svg>\n";
}

} // namespace shapeparts
