#pragma once

// Test-only reference computations. Nothing here calls the incremental hull,
// the boundary triangulation or the divided-difference section code, so the
// library's answers can be checked against them.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "godbersen/linalg.hpp"
#include "godbersen/polynomial.hpp"
#include "godbersen/rational.hpp"

namespace oracle {

using godbersen::Matrix;
using godbersen::Point;
using godbersen::Polynomial;
using godbersen::Rat;
using godbersen::Vector;
namespace la = godbersen::linalg;

struct Plane {
  Vector normal;  // primitive, outward
  Rat offset;
  std::vector<std::size_t> members;  // indices into the deduplicated points
};

inline std::vector<Point> dedupe(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

/// Facets by brute force over all n-subsets.
inline std::vector<Plane> brute_force_facets(const std::vector<Point>& pts) {
  const std::size_t n = pts.front().size();
  std::map<Vector, Plane> found;
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  const std::size_t m = pts.size();
  if (m < n) return {};
  while (true) {
    std::vector<Point> corners;
    for (auto i : idx) corners.push_back(pts[i]);
    if (auto normal = la::hyperplane_normal(corners)) {
      const Rat b = godbersen::dot(*normal, corners[0]);
      int above = 0, below = 0;
      for (const auto& p : pts) {
        const Rat d = godbersen::dot(*normal, p) - b;
        if (d.sign() > 0) ++above;
        if (d.sign() < 0) ++below;
      }
      if (above == 0 || below == 0) {
        Vector w = above == 0 ? *normal : -*normal;
        w = godbersen::primitive_integer(w);
        if (!found.count(w)) {
          Plane pl{w, godbersen::dot(w, corners[0]), {}};
          for (std::size_t i = 0; i < m; ++i) {
            if (godbersen::dot(w, pts[i]) == pl.offset) pl.members.push_back(i);
          }
          found.emplace(w, std::move(pl));
        }
      }
    }
    std::size_t i = n;
    while (i-- > 0 && idx[i] == m - n + i) {
    }
    if (i == static_cast<std::size_t>(-1)) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::vector<Plane> out;
  for (auto& [w, pl] : found) out.push_back(std::move(pl));
  return out;
}

/// Vertices: points whose incident facet normals have full rank.
inline std::vector<Point> brute_force_vertices(const std::vector<Point>& raw) {
  const auto pts = dedupe(raw);
  const auto planes = brute_force_facets(pts);
  const std::size_t n = pts.front().size();
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Matrix normals;
    for (const auto& pl : planes) {
      if (std::find(pl.members.begin(), pl.members.end(), i) != pl.members.end()) normals.push_back(pl.normal);
    }
    if (la::rank(normals) == n) out.push_back(pts[i]);
  }
  return out;
}

namespace detail {

inline std::size_t face_dim(const std::vector<Point>& pts, const std::set<std::size_t>& face) {
  std::vector<Point> sub;
  for (auto i : face) sub.push_back(pts[i]);
  return la::affine_rank(sub);
}

// Pulling triangulation of a face of dimension d, coning from its smallest
// vertex id over the sub-faces that avoid it.
inline void triangulate(const std::vector<Point>& pts, const std::vector<std::set<std::size_t>>& facets,
                        const std::set<std::size_t>& face, std::size_t d,
                        std::vector<std::vector<std::size_t>>& out) {
  if (face.size() == d + 1) {
    out.emplace_back(face.begin(), face.end());
    return;
  }
  const std::size_t apex = *face.begin();
  std::set<std::set<std::size_t>> subfaces;
  for (const auto& f : facets) {
    std::set<std::size_t> inter;
    std::set_intersection(face.begin(), face.end(), f.begin(), f.end(), std::inserter(inter, inter.begin()));
    if (inter.size() >= d && inter != face && face_dim(pts, inter) == d - 1) subfaces.insert(inter);
  }
  for (const auto& sub : subfaces) {
    if (sub.count(apex)) continue;
    std::vector<std::vector<std::size_t>> cells;
    triangulate(pts, facets, sub, d - 1, cells);
    for (auto& c : cells) {
      c.push_back(apex);
      out.push_back(std::move(c));
    }
  }
}

}  // namespace detail

/// Volume and centroid through a pulling triangulation built from the
/// brute-force face lattice.
struct Measure {
  Rat volume;
  Point centroid;
};

inline Measure pulling_measure(const std::vector<Point>& raw) {
  const auto pts = brute_force_vertices(raw);
  const std::size_t n = pts.front().size();
  std::vector<std::set<std::size_t>> facets;
  for (const auto& pl : brute_force_facets(pts)) facets.emplace_back(pl.members.begin(), pl.members.end());
  std::set<std::size_t> all;
  for (std::size_t i = 0; i < pts.size(); ++i) all.insert(i);
  std::vector<std::vector<std::size_t>> cells;
  detail::triangulate(pts, facets, all, n, cells);
  Rat fact(1);
  for (std::size_t i = 2; i <= n; ++i) fact *= Rat(static_cast<long>(i));
  Measure m{Rat(0), Point(n, Rat(0))};
  for (const auto& c : cells) {
    Matrix mat;
    Point sum(n, Rat(0));
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0) mat.push_back(pts[c[i]] - pts[c[0]]);
      sum = sum + pts[c[i]];
    }
    const Rat vol = godbersen::abs(la::determinant(mat)) / fact;
    m.volume += vol;
    m.centroid = m.centroid + (vol / Rat(static_cast<long>(n + 1))) * sum;
  }
  m.centroid = (Rat(1) / m.volume) * m.centroid;
  return m;
}

/// Points whose hull is conv(pts) intersected with {x . w <= t}: the points
/// below the level plus every segment crossing of it.
inline std::vector<Point> clip_below(const std::vector<Point>& pts, const Vector& w, const Rat& t) {
  std::vector<Point> out;
  for (const auto& p : pts) {
    if (godbersen::dot(p, w) <= t) out.push_back(p);
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = 0; j < pts.size(); ++j) {
      const Rat hi = godbersen::dot(pts[i], w);
      const Rat lo = godbersen::dot(pts[j], w);
      if (lo < t && t < hi) {
        const Rat lambda = (t - lo) / (hi - lo);
        out.push_back(pts[j] + lambda * (pts[i] - pts[j]));
      }
    }
  }
  return out;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline Polynomial interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
  Polynomial result;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial basis = Polynomial::constant(Rat(1));
    Rat denom(1);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      basis = basis * Polynomial({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    result += basis * (ys[i] / denom);
  }
  return result;
}

/// Section density piece on (lo, hi) by differentiating the interpolated
/// cumulative clipped volume.
inline Polynomial section_piece(const std::vector<Point>& pts, const Vector& w, const Rat& lo, const Rat& hi) {
  const std::size_t n = pts.front().size();
  std::vector<Rat> xs, ys;
  for (std::size_t k = 1; k <= n + 1; ++k) {
    const Rat t = lo + (hi - lo) * Rat(static_cast<long>(k), static_cast<long>(n + 2));
    xs.push_back(t);
    ys.push_back(pulling_measure(clip_below(pts, w, t)).volume);
  }
  return interpolate(xs, ys).derivative();
}

}  // namespace oracle
