#include "godbersen/polytope.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "godbersen/errors.hpp"
#include "godbersen/linalg.hpp"

namespace godbersen {

namespace {

Rat factorial(std::size_t n) {
  Rat f(1);
  for (std::size_t i = 2; i <= n; ++i) f *= Rat(static_cast<long>(i));
  return f;
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Beneath-beyond incremental hull over a simplicial boundary.
//
// Points exactly on a facet hyperplane are treated as beneath it, so every
// boundary simplex is full-dimensional. Coplanar simplices are merged into
// one facet afterwards.
class IncrementalHull {
 public:
  explicit IncrementalHull(const std::vector<Point>& pts) : pts_(pts) {
    if (pts_.empty()) throw DegenerateInput("empty point set");
    n_ = pts_[0].size();
    if (n_ < 2) throw DegenerateInput("dimension must be at least 2");
    for (const auto& p : pts_) {
      if (p.size() != n_) throw DimensionMismatch("points of mixed dimension");
    }
  }

  void run() {
    const auto initial = initial_simplex();
    interior_ = Point(n_, Rat(0));
    for (auto id : initial) interior_ = interior_ + pts_[id];
    interior_ = Rat(1, static_cast<long>(n_ + 1)) * interior_;

    for (std::size_t skip = 0; skip <= n_; ++skip) {
      std::vector<std::size_t> ids;
      for (std::size_t i = 0; i <= n_; ++i) {
        if (i != skip) ids.push_back(initial[i]);
      }
      add_facet(std::move(ids));
    }
    std::vector<bool> used(pts_.size(), false);
    for (auto id : initial) used[id] = true;
    for (std::size_t p = 0; p < pts_.size(); ++p) {
      if (!used[p]) insert(p);
    }
  }

  struct Simplex {
    std::vector<std::size_t> ids;  // sorted, size n
    Vector normal;                 // outward
    Rat offset;
    bool alive = true;
  };

  std::size_t dim() const { return n_; }
  const Point& interior() const { return interior_; }
  const std::vector<Simplex>& simplices() const { return simplices_; }
  const std::vector<Point>& points() const { return pts_; }

 private:
  std::vector<std::size_t> initial_simplex() const {
    std::vector<std::size_t> chosen{0};
    std::vector<Point> chosen_pts{pts_[0]};
    for (std::size_t i = 1; i < pts_.size() && chosen.size() <= n_; ++i) {
      chosen_pts.push_back(pts_[i]);
      if (linalg::affine_rank(chosen_pts) == chosen.size()) {
        chosen.push_back(i);
      } else {
        chosen_pts.pop_back();
      }
    }
    if (chosen.size() != n_ + 1) {
      throw DegenerateInput("points are not full-dimensional (affine rank " +
                            std::to_string(chosen.size() - 1) + " < " + std::to_string(n_) + ")");
    }
    return chosen;
  }

  void add_facet(std::vector<std::size_t> ids) {
    std::sort(ids.begin(), ids.end());
    std::vector<Point> corners;
    corners.reserve(ids.size());
    for (auto id : ids) corners.push_back(pts_[id]);
    auto normal = linalg::hyperplane_normal(corners);
    if (!normal) throw std::logic_error("hull: degenerate boundary simplex");
    Rat offset = dot(*normal, corners[0]);
    const Rat side = dot(*normal, interior_);
    if (side > offset) {
      *normal = -*normal;
      offset = -offset;
    } else if (side == offset) {
      throw std::logic_error("hull: interior point on a boundary hyperplane");
    }
    const std::size_t fid = simplices_.size();
    for (std::size_t drop = 0; drop < ids.size(); ++drop) {
      ridges_[ridge_key(ids, drop)].push_back(fid);
    }
    simplices_.push_back({std::move(ids), std::move(*normal), std::move(offset), true});
  }

  static std::vector<std::size_t> ridge_key(const std::vector<std::size_t>& ids, std::size_t drop) {
    std::vector<std::size_t> key;
    key.reserve(ids.size() - 1);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      if (i != drop) key.push_back(ids[i]);
    }
    return key;
  }

  void insert(std::size_t p) {
    const Point& pt = pts_[p];
    std::vector<std::size_t> visible;
    std::vector<bool> is_visible(simplices_.size(), false);
    for (std::size_t f = 0; f < simplices_.size(); ++f) {
      const auto& s = simplices_[f];
      if (s.alive && dot(s.normal, pt) > s.offset) {
        visible.push_back(f);
        is_visible[f] = true;
      }
    }
    if (visible.empty()) return;

    std::vector<std::vector<std::size_t>> horizon;
    for (auto f : visible) {
      const auto& ids = simplices_[f].ids;
      for (std::size_t drop = 0; drop < ids.size(); ++drop) {
        auto key = ridge_key(ids, drop);
        const auto& owners = ridges_.at(key);
        bool crosses = false;
        for (auto o : owners) {
          if (o != f && !is_visible[o]) crosses = true;
        }
        if (crosses) horizon.push_back(std::move(key));
      }
    }
    for (auto f : visible) {
      auto& s = simplices_[f];
      s.alive = false;
      for (std::size_t drop = 0; drop < s.ids.size(); ++drop) {
        auto it = ridges_.find(ridge_key(s.ids, drop));
        auto& owners = it->second;
        owners.erase(std::remove(owners.begin(), owners.end(), f), owners.end());
        if (owners.empty()) ridges_.erase(it);
      }
    }
    for (auto& ridge : horizon) {
      ridge.push_back(p);
      add_facet(std::move(ridge));
    }
  }

  const std::vector<Point>& pts_;
  std::size_t n_ = 0;
  Point interior_;
  std::vector<Simplex> simplices_;
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> ridges_;
};

}  // namespace

Polytope Polytope::hull(const std::vector<Point>& points) {
  IncrementalHull hull(points);
  hull.run();
  const std::size_t n = hull.dim();
  const auto& pts = hull.points();

  // Group boundary simplices by primitive outward normal.
  std::map<Vector, std::vector<std::size_t>, decltype(&lex_less)> groups(&lex_less);
  for (std::size_t s = 0; s < hull.simplices().size(); ++s) {
    const auto& simplex = hull.simplices()[s];
    if (simplex.alive) groups[primitive_integer(simplex.normal)].push_back(s);
  }

  struct Plane {
    Vector normal;
    Rat offset;
  };
  std::vector<Plane> planes;
  planes.reserve(groups.size());
  for (const auto& [normal, members] : groups) {
    const auto& first = hull.simplices()[members.front()];
    planes.push_back({normal, dot(normal, pts[first.ids.front()])});
  }

  // A boundary point is a vertex iff the normals of the facets through it
  // span R^n.
  std::vector<bool> on_boundary(pts.size(), false);
  for (const auto& s : hull.simplices()) {
    if (!s.alive) continue;
    for (auto id : s.ids) on_boundary[id] = true;
  }
  std::vector<Point> vertices;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!on_boundary[i]) continue;
    Matrix normals;
    for (const auto& pl : planes) {
      if (dot(pl.normal, pts[i]) == pl.offset) normals.push_back(pl.normal);
    }
    if (linalg::rank(std::move(normals)) == n) vertices.push_back(pts[i]);
  }
  std::sort(vertices.begin(), vertices.end(), lex_less);
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  Polytope poly;
  poly.dim_ = n;
  poly.vertices_ = std::move(vertices);

  const Rat ridge_factorial = factorial(n - 1);
  std::size_t g = 0;
  for (const auto& [normal, members] : groups) {
    Facet facet;
    facet.normal = normal;
    facet.offset = planes[g++].offset;
    const Rat norm_sq = dot(normal, normal);
    Rat measure(0);
    for (auto s : members) {
      const auto& ids = hull.simplices()[s].ids;
      Matrix m{normal};
      for (std::size_t k = 1; k < ids.size(); ++k) m.push_back(pts[ids[k]] - pts[ids[0]]);
      measure += abs(linalg::determinant(std::move(m)));
    }
    facet.scaled_measure = measure / (ridge_factorial * norm_sq);
    for (std::size_t v = 0; v < poly.vertices_.size(); ++v) {
      if (dot(normal, poly.vertices_[v]) == facet.offset) facet.vertex_ids.push_back(v);
    }
    poly.facets_.push_back(std::move(facet));
  }

  for (const auto& s : hull.simplices()) {
    if (!s.alive) continue;
    std::vector<Point> corners;
    corners.reserve(n);
    for (auto id : s.ids) corners.push_back(pts[id]);
    poly.boundary_.push_back(std::move(corners));
  }

  poly.interior_ = Point(n, Rat(0));
  for (const auto& v : poly.vertices_) poly.interior_ = poly.interior_ + v;
  poly.interior_ = Rat(1, static_cast<long>(poly.vertices_.size())) * poly.interior_;

  // Cone every boundary simplex to the interior point.
  const Rat n_factorial = factorial(n);
  Rat total(0);
  Point weighted(n, Rat(0));
  for (const auto& corners : poly.boundary_) {
    Matrix m;
    Point sum = poly.interior_;
    for (const auto& c : corners) {
      m.push_back(c - poly.interior_);
      sum = sum + c;
    }
    const Rat vol = abs(linalg::determinant(std::move(m))) / n_factorial;
    total += vol;
    weighted = weighted + (vol / Rat(static_cast<long>(n + 1))) * sum;
  }
  poly.volume_ = total;
  poly.centroid_ = (Rat(1) / total) * weighted;
  return poly;
}

Polytope build_hull(const std::vector<Point>& points) { return Polytope::hull(points); }

Rat support(const Polytope& k, const Vector& w) {
  if (w.size() != k.dim()) throw DimensionMismatch("support: direction has wrong length");
  if (is_zero(w)) throw ZeroDirection("support: zero direction");
  Rat best = dot(k.vertices().front(), w);
  for (std::size_t i = 1; i < k.vertices().size(); ++i) {
    Rat v = dot(k.vertices()[i], w);
    if (v > best) best = std::move(v);
  }
  return best;
}

Polytope transform(const Polytope& k, const Matrix& a, const Point& t) {
  if (a.size() != k.dim() || t.size() != k.dim()) throw DimensionMismatch("transform: wrong sizes");
  if (linalg::determinant(a).is_zero()) throw SingularMatrix("transform: singular matrix");
  std::vector<Point> mapped;
  mapped.reserve(k.vertices().size());
  for (const auto& v : k.vertices()) mapped.push_back(linalg::apply(a, v) + t);
  return build_hull(mapped);
}

Polytope translate(const Polytope& k, const Point& t) {
  return transform(k, linalg::identity(k.dim()), t);
}

Polytope scale(const Polytope& k, const Rat& s) {
  Matrix m = linalg::identity(k.dim());
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] = s;
  return transform(k, m, Point(k.dim(), Rat(0)));
}

Polytope reflect(const Polytope& k) { return scale(k, Rat(-1)); }

Polytope minkowski_sum(const Polytope& k, const Polytope& l) {
  if (k.dim() != l.dim()) throw DimensionMismatch("minkowski_sum: dimension mismatch");
  std::vector<Point> sums;
  sums.reserve(k.vertices().size() * l.vertices().size());
  for (const auto& v : k.vertices()) {
    for (const auto& u : l.vertices()) sums.push_back(v + u);
  }
  return build_hull(sums);
}

Rat volume(const Polytope& k) { return k.volume(); }

Point centroid(const Polytope& k) { return k.centroid(); }

bool includes(const Polytope& outer, const Polytope& inner) {
  if (outer.dim() != inner.dim()) throw DimensionMismatch("includes: dimension mismatch");
  for (const auto& v : inner.vertices()) {
    for (const auto& f : outer.facets()) {
      if (dot(v, f.normal) > f.offset) return false;
    }
  }
  return true;
}

}  // namespace godbersen
