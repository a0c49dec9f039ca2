#include "shapeparts/contour.hpp"

#include <nlohmann/json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace shapeparts {

namespace {

PointMatrix to_matrix(const std::vector<Point>& pts) {
  PointMatrix m(2, static_cast<Eigen::Index>(pts.size()));
  for (Eigen::Index i = 0; i < m.cols(); ++i) m.col(i) = pts[i];
  return m;
}

bool parse_xy(const std::string& line, double& x, double& y) {
  std::string buf = line;
  for (auto& ch : buf)
    if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
  std::istringstream ss(buf);
  return static_cast<bool>(ss >> x >> y);
}

} // namespace

Contour make_contour(PointMatrix points) {
  const auto same = [](const Point& a, const Point& b) {
    return a.x() == b.x() && a.y() == b.y();
  };
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(points.cols()));
  for (Eigen::Index i = 0; i < points.cols(); ++i) {
    const Point p = points.col(i);
    if (!pts.empty() && same(pts.back(), p)) continue; // coincident
    pts.push_back(p);
  }
  if (pts.size() > 1 && same(pts.front(), pts.back())) pts.pop_back();

  std::set<std::pair<double, double>> distinct;
  for (const auto& p : pts) distinct.insert({p.x(), p.y()});
  if (distinct.size() < 3)
    throw std::invalid_argument("contour needs at least 3 distinct points");

  PointMatrix m = to_matrix(pts);
  std::pair<Eigen::Index, Eigen::Index> bad;
  if (!is_simple_polygon(m, &bad)) {
    throw std::invalid_argument(
        "contour is self-intersecting: edges " + std::to_string(bad.first) +
        " and " + std::to_string(bad.second) + " touch");
  }
  if (signed_area(m) < 0) {
    // Reverse keeping the first point first, so a clockwise listing maps to
    // the identical counterclockwise point array.
    PointMatrix rev(2, m.cols());
    rev.col(0) = m.col(0);
    for (Eigen::Index i = 1; i < m.cols(); ++i)
      rev.col(i) = m.col(m.cols() - i);
    m = std::move(rev);
  }
  return Contour{std::move(m)};
}

Contour load_contour(std::istream& in, ContourFormat format) {
  std::vector<Point> pts;
  if (format == ContourFormat::Csv) {
    std::string line;
    std::size_t line_no = 0;
    bool first_content = true;
    while (std::getline(in, line)) {
      ++line_no;
      std::size_t begin = line.find_first_not_of(" \t\r\n");
      if (begin == std::string::npos) continue;
      double x = 0, y = 0;
      if (!parse_xy(line, x, y)) {
        if (first_content) { // header line such as "x,y"
          first_content = false;
          continue;
        }
        throw std::invalid_argument("cannot parse CSV line " +
                                    std::to_string(line_no) + ": " + line);
      }
      first_content = false;
      pts.emplace_back(x, y);
    }
  } else {
    nlohmann::json doc;
    try {
      in >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("cannot parse JSON contour: ") +
                                  e.what());
    }
    if (!doc.contains("points") || !doc["points"].is_array())
      throw std::invalid_argument("JSON contour needs a \"points\" array");
    for (const auto& item : doc["points"]) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_number() ||
          !item[1].is_number())
        throw std::invalid_argument(
            "JSON contour points must be [x,y] number pairs");
      pts.emplace_back(item[0].get<double>(), item[1].get<double>());
    }
  }
  if (pts.size() < 3)
    throw std::invalid_argument("contour needs at least 3 distinct points");
  return make_contour(to_matrix(pts));
}

Contour load_contour_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  const bool json = path.size() >= 5 &&
                    path.compare(path.size() - 5, 5, ".json") == 0;
  return load_contour(in, json ? ContourFormat::Json : ContourFormat::Csv);
}

void save_contour(const Contour& c, std::ostream& out, ContourFormat format) {
  char buf[64];
  if (format == ContourFormat::Csv) {
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", c.points(0, i),
                    c.points(1, i));
      out << buf << '\n';
    }
  } else {
    nlohmann::json doc;
    auto& arr = doc["points"] = nlohmann::json::array();
    for (Eigen::Index i = 0; i < c.size(); ++i)
      arr.push_back({c.points(0, i), c.points(1, i)});
    out << doc.dump();
  }
}

Contour resample_uniform(const Contour& c, Eigen::Index target_count) {
  if (target_count < 8)
    throw std::invalid_argument("resample target must be at least 8 points");
  const Eigen::Index n = c.size();
  std::vector<double> cum(static_cast<std::size_t>(n) + 1, 0.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    cum[i + 1] =
        cum[i] + (c.points.col((i + 1) % n) - c.points.col(i)).norm();
  }
  const double total = cum.back();
  if (total <= 0)
    throw std::invalid_argument("contour has zero perimeter");

  PointMatrix out(2, target_count);
  Eigen::Index edge = 0;
  for (Eigen::Index k = 0; k < target_count; ++k) {
    const double target = total * static_cast<double>(k) /
                          static_cast<double>(target_count);
    while (edge + 1 < n && cum[edge + 1] <= target) ++edge;
    const double len = cum[edge + 1] - cum[edge];
    const double t = len > 0 ? (target - cum[edge]) / len : 0.0;
    out.col(k) = c.points.col(edge) +
                 t * (c.points.col((edge + 1) % n) - c.points.col(edge));
  }

  std::pair<Eigen::Index, Eigen::Index> bad;
  if (!is_simple_polygon(out, &bad)) {
    throw std::runtime_error(
        "resampling produced a self-intersecting polygon (edges " +
        std::to_string(bad.first) + " and " + std::to_string(bad.second) +
        "); shape too thin for " + std::to_string(target_count) + " samples");
  }
  if (signed_area(out) <= 0)
    throw std::runtime_error("resampling collapsed the contour orientation");
  return Contour{std::move(out)};
}

} // namespace shapeparts
