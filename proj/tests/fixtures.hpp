#pragma once

#include "shapeparts/contour.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

namespace fixtures {

using shapeparts::Contour;
using shapeparts::PointMatrix;

inline Contour from_list(std::initializer_list<std::pair<double, double>> pts) {
  PointMatrix m(2, static_cast<Eigen::Index>(pts.size()));
  Eigen::Index i = 0;
  for (const auto& [x, y] : pts) m.col(i++) = Eigen::Vector2d(x, y);
  return Contour{std::move(m)};
}

inline Contour square() {
  return from_list({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
}

// Concave hexagon; the pair ((2,1),(1,2)) is not mutually visible.
inline Contour l_shape() {
  return from_list({{0, 0}, {2, 0}, {2, 1}, {1, 1}, {1, 2}, {0, 2}});
}

inline Contour octagon() {
  return from_list({{2, 0}, {4, 0}, {6, 2}, {6, 4}, {4, 6}, {2, 6}, {0, 4}, {0, 2}});
}

inline Contour circle(Eigen::Index n, double radius = 1.0, double cx = 0.0,
                      double cy = 0.0) {
  PointMatrix m(2, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(n);
    m.col(i) = Eigen::Vector2d(cx + radius * std::cos(a),
                               cy + radius * std::sin(a));
  }
  return Contour{std::move(m)};
}

inline Contour ellipse(Eigen::Index n, double a, double b) {
  PointMatrix m(2, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * static_cast<double>(i) /
                     static_cast<double>(n);
    m.col(i) = Eigen::Vector2d(a * std::cos(t), b * std::sin(t));
  }
  return Contour{std::move(m)};
}

// Random star-shaped polygon: jittered angular grid, radii bounded away from
// zero. Always simple. Vertices are nudged radially until no vertex sits
// close to a chord between two other vertices, so that visibility decisions
// are resolvable by a 1000-sample oracle (no sub-resolution excursions past
// a vertex).
inline Contour star_polygon(std::mt19937_64& rng, Eigen::Index n,
                            double r_min = 0.72, double r_max = 1.0) {
  std::uniform_real_distribution<double> jitter(-0.22, 0.22);
  std::uniform_real_distribution<double> radius(r_min, r_max);
  std::uniform_real_distribution<double> step(0.03, 0.08);
  std::vector<double> angles(static_cast<std::size_t>(n));
  std::vector<double> radii(static_cast<std::size_t>(n));

  const auto vertex = [&](std::size_t i) {
    return Eigen::Vector2d(radii[i] * std::cos(angles[i]),
                           radii[i] * std::sin(angles[i]));
  };
  const auto chord_distance = [](const Eigen::Vector2d& p,
                                 const Eigen::Vector2d& a,
                                 const Eigen::Vector2d& b) {
    const Eigen::Vector2d ab = b - a;
    const double len2 = ab.squaredNorm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + t * ab)).norm();
  };
  const auto cross_param = [](const Eigen::Vector2d& p, const Eigen::Vector2d& q,
                              const Eigen::Vector2d& a, const Eigen::Vector2d& b,
                              double& t) {
    const Eigen::Vector2d r = q - p, s = b - a;
    const double denom = r.x() * s.y() - r.y() * s.x();
    if (denom == 0.0) return false;
    const Eigen::Vector2d ap = a - p;
    t = (ap.x() * s.y() - ap.y() * s.x()) / denom;
    const double u = (ap.x() * r.y() - ap.y() * r.x()) / denom;
    return t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0;
  };

  // A 1000-sample oracle cannot see a boundary excursion shorter than its
  // sampling step. Find any chord whose consecutive boundary crossings are
  // closer than a few steps and push the vertex nearest that chord off it;
  // regenerate outright if the cleanup cycles.
  const double min_gap = 5e-3; // of the chord parameter, ~5 sample steps
  const std::size_t un = static_cast<std::size_t>(n);
  std::vector<double> ts;
  const auto find_tight_chord = [&](std::size_t& i_out, std::size_t& j_out,
                                    std::size_t& v_out) {
    for (std::size_t i = 0; i < un; ++i) {
      for (std::size_t j = i + 1; j < un; ++j) {
        const Eigen::Vector2d p = vertex(i), q = vertex(j);
        ts.assign({0.0, 1.0});
        for (std::size_t k = 0; k < un; ++k) {
          const std::size_t k2 = (k + 1) % un;
          if (k == i || k == j || k2 == i || k2 == j) continue;
          double t = 0;
          if (cross_param(p, q, vertex(k), vertex(k2), t)) ts.push_back(t);
        }
        if (ts.size() < 3) continue; // no crossings, nothing to resolve
        std::sort(ts.begin(), ts.end());
        bool tight = false;
        for (std::size_t s = 0; s + 1 < ts.size(); ++s)
          if (ts[s + 1] - ts[s] < min_gap) tight = true;
        if (!tight) continue;
        // nudge whichever other vertex sits closest to this chord
        double best = 1e18;
        for (std::size_t v = 0; v < un; ++v) {
          if (v == i || v == j) continue;
          const double d = chord_distance(vertex(v), p, q);
          if (d < best) {
            best = d;
            v_out = v;
          }
        }
        i_out = i;
        j_out = j;
        return true;
      }
    }
    return false;
  };

  for (int attempt = 0; attempt < 50; ++attempt) {
    for (Eigen::Index i = 0; i < n; ++i) {
      angles[static_cast<std::size_t>(i)] =
          2.0 * std::numbers::pi *
          (static_cast<double>(i) + 0.5 + jitter(rng)) / static_cast<double>(n);
      radii[static_cast<std::size_t>(i)] = radius(rng);
    }
    bool clean = false;
    for (int fixes = 0; fixes < 200 && !clean; ++fixes) {
      std::size_t i = 0, j = 0, v = 0;
      if (!find_tight_chord(i, j, v)) {
        clean = true;
        break;
      }
      const double save = radii[v];
      const double s = step(rng);
      radii[v] = std::min(save * (1.0 + s), 1.15);
      if (chord_distance(vertex(v), vertex(i), vertex(j)) <
          chord_distance(Eigen::Vector2d(save * std::cos(angles[v]),
                                         save * std::sin(angles[v])),
                         vertex(i), vertex(j)))
        radii[v] = std::max(save * (1.0 - s), 0.55);
    }
    if (clean) break;
  }

  PointMatrix m(2, n);
  for (Eigen::Index i = 0; i < n; ++i)
    m.col(i) = vertex(static_cast<std::size_t>(i));
  return Contour{std::move(m)};
}

// Two circular lobes joined by a thin corridor bent along a circular arc of
// radius spine_radius; the corridor is pinched at both throats so that no
// line of sight grazes from it into a lobe, and the bend blocks sight between
// the lobes. Decomposing it yields one part per lobe with the corridor
// unassigned.
struct Dumbbell {
  Contour contour;
  Eigen::Vector2d lobe1_center, lobe2_center;
  double lobe1_radius = 0.0, lobe2_radius = 0.0;
  std::vector<Eigen::Vector2d> junctions; // corridor/lobe meeting points

  // 1 or 2 when the point lies on a lobe arc away from the junctions,
  // 0 for corridor and junction-ambiguous points.
  int lobe_of(const Eigen::Vector2d& p, double junction_margin = 0.06) const {
    for (const auto& j : junctions)
      if ((p - j).norm() < junction_margin) return 0;
    if (std::abs((p - lobe1_center).norm() - lobe1_radius) < 2e-3) return 1;
    if (std::abs((p - lobe2_center).norm() - lobe2_radius) < 2e-3) return 2;
    return 0;
  }
};

inline Dumbbell dumbbell(double spine_radius = 1.0, double bend = 2.4,
                         double lobe1_r = 0.60, double lobe2_r = 0.55,
                         double throat_w = 0.006, double corridor_w = 0.012,
                         int raw = 1200) {
  const double Rc = spine_radius;
  const double half = bend / 2.0;
  const Eigen::Vector2d e1(Rc * std::cos(-half), Rc * std::sin(-half));
  const Eigen::Vector2d e2(Rc * std::cos(half), Rc * std::sin(half));
  const auto wall_meet = [&](double wall_r, double lobe_r) {
    const double c = (wall_r * wall_r + Rc * Rc - lobe_r * lobe_r) /
                     (2.0 * wall_r * Rc);
    return std::acos(std::clamp(c, -1.0, 1.0));
  };
  const double to1 = wall_meet(Rc + throat_w, lobe1_r);
  const double ti1 = wall_meet(Rc - throat_w, lobe1_r);
  const double to2 = wall_meet(Rc + throat_w, lobe2_r);
  const double ti2 = wall_meet(Rc - throat_w, lobe2_r);

  std::vector<Eigen::Vector2d> pts;
  // Walls widen from the throats toward the corridor middle. Each piece emits
  // [a0, a1); the next piece supplies the junction point.
  const auto wall = [&](double a0, double a1, int n, double sign) {
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / n;
      const double a = a0 + t * (a1 - a0);
      const double s = std::sin(std::numbers::pi * t);
      const double wt = throat_w + (corridor_w - throat_w) * s * s;
      pts.emplace_back((Rc + sign * wt) * std::cos(a),
                       (Rc + sign * wt) * std::sin(a));
    }
  };
  const auto arc = [&](const Eigen::Vector2d& center, double r, double a0,
                       double a1, int n) {
    for (int i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) / n;
      const double a = a0 + t * (a1 - a0);
      pts.emplace_back(center.x() + r * std::cos(a),
                       center.y() + r * std::sin(a));
    }
  };
  const auto ang = [](const Eigen::Vector2d& v) {
    return std::atan2(v.y(), v.x());
  };
  const Eigen::Vector2d j1o((Rc + throat_w) * std::cos(-half + to1),
                            (Rc + throat_w) * std::sin(-half + to1));
  const Eigen::Vector2d j1i((Rc - throat_w) * std::cos(-half + ti1),
                            (Rc - throat_w) * std::sin(-half + ti1));
  const Eigen::Vector2d j2o((Rc + throat_w) * std::cos(half - to2),
                            (Rc + throat_w) * std::sin(half - to2));
  const Eigen::Vector2d j2i((Rc - throat_w) * std::cos(half - ti2),
                            (Rc - throat_w) * std::sin(half - ti2));
  double s2 = ang(j2o - e2), e2a = ang(j2i - e2);
  while (e2a <= s2) e2a += 2 * std::numbers::pi;
  double s1 = ang(j1i - e1), e1a = ang(j1o - e1);
  while (e1a <= s1) e1a += 2 * std::numbers::pi;
  const double len1 = (e1a - s1) * lobe1_r;
  const double len2 = (e2a - s2) * lobe2_r;
  const double lo = ((half - to2) - (-half + to1)) * Rc;
  const double li = ((half - ti2) - (-half + ti1)) * Rc;
  const double total = len1 + len2 + lo + li;
  const int nl1 = std::max(16, static_cast<int>(std::lround(raw * len1 / total)));
  const int nl2 = std::max(16, static_cast<int>(std::lround(raw * len2 / total)));
  const int no = std::max(8, static_cast<int>(std::lround(raw * lo / total)));
  const int ni = std::max(8, static_cast<int>(std::lround(raw * li / total)));

  // Counterclockwise: outer wall, far side of lobe 2, inner wall, lobe 1.
  wall(-half + to1, half - to2, no, +1.0);
  arc(e2, lobe2_r, s2, e2a, nl2);
  wall(half - ti2, -half + ti1, ni, -1.0);
  arc(e1, lobe1_r, s1, e1a, nl1);

  PointMatrix m(2, static_cast<Eigen::Index>(pts.size()));
  for (Eigen::Index i = 0; i < m.cols(); ++i)
    m.col(i) = pts[static_cast<std::size_t>(i)];

  Dumbbell d;
  d.contour = shapeparts::make_contour(std::move(m));
  d.lobe1_center = e1;
  d.lobe2_center = e2;
  d.lobe1_radius = lobe1_r;
  d.lobe2_radius = lobe2_r;
  d.junctions = {j1o, j1i, j2o, j2i};
  return d;
}

inline Eigen::MatrixXi random_symmetric01(std::mt19937_64& rng, Eigen::Index n,
                                          double p = 0.4) {
  std::bernoulli_distribution coin(p);
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      a(i, j) = a(j, i) = coin(rng) ? 1 : 0;
  return a;
}

inline Eigen::MatrixXi random_weighted_symmetric(std::mt19937_64& rng,
                                                 Eigen::Index n, double p = 0.35,
                                                 int w_max = 5) {
  std::bernoulli_distribution coin(p);
  std::uniform_int_distribution<int> weight(1, w_max);
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (coin(rng)) a(i, j) = a(j, i) = weight(rng);
  return a;
}

// Block-diagonal cliques over consecutive index ranges with a shared weight.
inline Eigen::MatrixXi block_cliques(const std::vector<Eigen::Index>& sizes,
                                     int weight) {
  Eigen::Index n = 0;
  for (const Eigen::Index s : sizes) n += s;
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  Eigen::Index base = 0;
  for (const Eigen::Index s : sizes) {
    for (Eigen::Index i = 0; i < s; ++i)
      for (Eigen::Index j = 0; j < s; ++j)
        if (i != j) a(base + i, base + j) = weight;
    base += s;
  }
  return a;
}

inline Eigen::MatrixXi cycle_adjacency(Eigen::Index n) {
  Eigen::MatrixXi a = Eigen::MatrixXi::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, (i + 1) % n) = 1;
    a((i + 1) % n, i) = 1;
  }
  return a;
}

} // namespace fixtures
