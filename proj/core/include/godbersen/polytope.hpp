#pragma once

#include <cstddef>
#include <vector>

#include "godbersen/polynomial.hpp"
#include "godbersen/rational.hpp"

namespace godbersen {

/// One facet of a polytope, stored without square roots.
///
/// The facet lies in {x : x . normal = offset} and every vertex satisfies
/// x . normal <= offset. `normal` is the primitive integer outward normal, so
/// it is NOT a unit vector. `scaled_measure` is the facet's (n-1)-volume
/// divided by |normal|; multiplying it by |normal| recovers the surface area
/// measure atom at the unit normal.
struct Facet {
  Vector normal;
  Rat offset;
  Rat scaled_measure;
  std::vector<std::size_t> vertex_ids;
};

/// Full-dimensional convex polytope with exact rational vertices.
///
/// Instances are immutable. Construction computes the irredundant vertex
/// list (sorted lexicographically), the facet list (sorted lexicographically
/// by normal), a triangulation of the boundary, the volume and the centroid.
class Polytope {
 public:
  /// Convex hull of a finite point set. Throws DegenerateInput when the
  /// points do not affinely span R^n or when n < 2.
  static Polytope hull(const std::vector<Point>& points);

  std::size_t dim() const { return dim_; }
  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  /// (n-1)-simplices, each given by n points, tiling the boundary.
  const std::vector<std::vector<Point>>& boundary_simplices() const { return boundary_; }
  /// A strictly interior point (the vertex average).
  const Point& interior_point() const { return interior_; }
  const Rat& volume() const { return volume_; }
  const Point& centroid() const { return centroid_; }
  bool is_simplex() const { return vertices_.size() == dim_ + 1; }

  friend bool operator==(const Polytope& a, const Polytope& b) { return a.vertices_ == b.vertices_; }

 private:
  Polytope() = default;

  std::size_t dim_ = 0;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<std::vector<Point>> boundary_;
  Point interior_;
  Rat volume_;
  Point centroid_;
};

/// Profile of hyperplane sections orthogonal to a direction w.
///
/// s(t) is the derivative of Vol(K intersected with {x . w <= t}), so it is
/// measured in the x . w coordinate rather than arclength:
/// s(t) = V_{n-1}(section) / |w|. Its integral over the support is Vol(K).
/// Between consecutive breakpoints s is a polynomial of degree <= n-1.
class SectionProfile {
 public:
  SectionProfile(Vector direction, std::vector<Rat> breakpoints, std::vector<Polynomial> pieces);

  const Vector& direction() const { return direction_; }
  const std::vector<Rat>& breakpoints() const { return breakpoints_; }
  const std::vector<Polynomial>& pieces() const { return pieces_; }
  const Rat& lower() const { return breakpoints_.front(); }
  const Rat& upper() const { return breakpoints_.back(); }

  /// s(t); zero outside the support. At an interior breakpoint the left
  /// piece is used (s is continuous there).
  Rat operator()(const Rat& t) const;

  Rat integral() const;
  /// Exact value of the integral of t^k s(t).
  Rat moment(unsigned k) const;

 private:
  Vector direction_;
  std::vector<Rat> breakpoints_;
  std::vector<Polynomial> pieces_;
};

Polytope build_hull(const std::vector<Point>& points);

/// max over vertices of v . w. Throws ZeroDirection for w = 0.
Rat support(const Polytope& k, const Vector& w);

/// hull{A v + t}. Throws SingularMatrix when det A = 0.
Polytope transform(const Polytope& k, const Matrix& a, const Point& t);
Polytope translate(const Polytope& k, const Point& t);
/// s K for s > 0.
Polytope scale(const Polytope& k, const Rat& s);
/// -K.
Polytope reflect(const Polytope& k);

Polytope minkowski_sum(const Polytope& k, const Polytope& l);

Rat volume(const Polytope& k);
Point centroid(const Polytope& k);

/// True iff inner is contained in outer, decided exactly on vertices.
bool includes(const Polytope& outer, const Polytope& inner);

SectionProfile section_profile(const Polytope& k, const Vector& w);

}  // namespace godbersen
