#include <doctest.h>

#include "fixtures.hpp"
#include "godbersen/errors.hpp"
#include "godbersen/linalg.hpp"
#include "godbersen/random.hpp"
#include "oracles.hpp"

using namespace fixtures;
using godbersen::Matrix;
namespace la = godbersen::linalg;

namespace {

std::vector<Point> random_cloud(godbersen::Rng& rng, std::size_t n, std::size_t count, long den) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < count; ++i) {
    Point p;
    for (std::size_t c = 0; c < n; ++c) p.push_back(rng.rational(3, den));
    pts.push_back(p);
  }
  return pts;
}

Matrix random_invertible(godbersen::Rng& rng, std::size_t n) {
  while (true) {
    Matrix a(n, Vector(n));
    for (auto& row : a) {
      for (auto& x : row) x = rng.rational(3, 3);
    }
    if (!la::determinant(a).is_zero()) return a;
  }
}

}  // namespace

TEST_CASE("build_hull: unit square") {
  const Polytope sq = square();
  CHECK(sq.vertices().size() == 4);
  CHECK(sq.facets().size() == 4);
  CHECK(sq.dim() == 2);
}

TEST_CASE("build_hull: interior point is dropped") {
  const Polytope sq = godbersen::build_hull({V({"0", "0"}), V({"1", "0"}), V({"1/2", "1/2"}), V({"1", "1"}), V({"0", "1"})});
  CHECK(sq.vertices() == square().vertices());
}

TEST_CASE("build_hull: points on edges and duplicates are not vertices") {
  const Polytope sq = godbersen::build_hull({V({"0", "0"}), V({"1/2", "0"}), V({"1", "0"}), V({"1", "0"}),
                                             V({"1", "1"}), V({"0", "1"}), V({"0", "1/3"})});
  CHECK(sq.vertices() == square().vertices());
  CHECK(sq.facets().size() == 4);
  for (const auto& f : sq.facets()) CHECK(f.scaled_measure == Rat(1));
}

TEST_CASE("build_hull: triangle facet data") {
  const Polytope t = triangle();
  REQUIRE(t.facets().size() == 3);
  CHECK(t.facets()[0].normal == V({"-1", "0"}));
  CHECK(t.facets()[0].offset == Rat(0));
  CHECK(t.facets()[0].scaled_measure == Rat(1));
  CHECK(t.facets()[1].normal == V({"0", "-1"}));
  CHECK(t.facets()[1].offset == Rat(0));
  CHECK(t.facets()[1].scaled_measure == Rat(1));
  // Edge (1,0)-(0,1) has length sqrt 2 and |w| = sqrt 2.
  CHECK(t.facets()[2].normal == V({"1", "1"}));
  CHECK(t.facets()[2].offset == Rat(1));
  CHECK(t.facets()[2].scaled_measure == Rat(1));
}

TEST_CASE("build_hull: degenerate and malformed input") {
  CHECK_THROWS_AS(godbersen::build_hull({V({"0", "0"}), V({"1", "1"}), V({"2", "2"})}), godbersen::DegenerateInput);
  CHECK_THROWS_AS(godbersen::build_hull({V({"0", "0"}), V({"1", "0"})}), godbersen::DegenerateInput);
  CHECK_THROWS_AS(godbersen::build_hull({V({"0", "0", "0"}), V({"1", "0", "0"}), V({"0", "1", "0"}), V({"1", "1", "0"})}),
                  godbersen::DegenerateInput);
  CHECK_THROWS_AS(godbersen::build_hull({V({"0", "0"}), V({"1", "0", "0"}), V({"0", "1"})}), godbersen::DimensionMismatch);
}

TEST_CASE("build_hull agrees with brute-force facet enumeration") {
  godbersen::Rng rng(7);
  for (std::size_t n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 8; ++trial) {
      const auto cloud = random_cloud(rng, n, n + 3 + trial, trial % 2 ? 2 : 1);
      if (godbersen::linalg::affine_rank(cloud) < n) continue;
      const Polytope k = godbersen::build_hull(cloud);
      const auto planes = oracle::brute_force_facets(oracle::dedupe(cloud));
      REQUIRE(planes.size() == k.facets().size());
      for (std::size_t f = 0; f < planes.size(); ++f) {
        CHECK(planes[f].normal == k.facets()[f].normal);
        CHECK(planes[f].offset == k.facets()[f].offset);
      }
      CHECK(oracle::brute_force_vertices(cloud) == k.vertices());
    }
  }
}

TEST_CASE("facet invariants") {
  for (const auto& k : small_corpus()) {
    for (const auto& f : k.facets()) {
      CHECK(f.scaled_measure > Rat(0));
      CHECK(f.vertex_ids.size() >= k.dim());
      for (std::size_t v = 0; v < k.vertices().size(); ++v) {
        const bool on = std::find(f.vertex_ids.begin(), f.vertex_ids.end(), v) != f.vertex_ids.end();
        const Rat d = godbersen::dot(k.vertices()[v], f.normal);
        CHECK(d <= f.offset);
        CHECK(on == (d == f.offset));
      }
    }
    for (std::size_t v = 0; v < k.vertices().size(); ++v) {
      std::size_t incident = 0;
      for (const auto& f : k.facets()) incident += std::count(f.vertex_ids.begin(), f.vertex_ids.end(), v);
      CHECK(incident >= k.dim());
    }
  }
}

TEST_CASE("support") {
  CHECK(godbersen::support(square(), V({"1", "1"})) == Rat(2));
  CHECK(godbersen::support(triangle(), V({"1", "1"})) == Rat(1));
  CHECK(godbersen::support(godbersen::reflect(triangle()), V({"1", "1"})) == Rat(0));
  CHECK_THROWS_AS(godbersen::support(square(), V({"0", "0"})), godbersen::ZeroDirection);
  // Positive homogeneity.
  CHECK(godbersen::support(triangle(), V({"3", "5"})) == Rat(5));
  CHECK(godbersen::support(triangle(), V({"3/7", "5/7"})) == Rat(5, 7));
}

TEST_CASE("support is subadditive and additive under Minkowski sums") {
  godbersen::Rng rng(11);
  const auto corpus = small_corpus(3);
  for (std::size_t i = 0; i + 1 < corpus.size(); ++i) {
    const Polytope& k = corpus[i];
    const Polytope& l = corpus[i + 1];
    if (k.dim() != l.dim()) continue;
    const Polytope sum = godbersen::minkowski_sum(k, l);
    std::vector<Vector> dirs;
    for (const auto& f : sum.facets()) dirs.push_back(f.normal);
    for (int r = 0; r < 10; ++r) {
      Vector w;
      for (std::size_t c = 0; c < k.dim(); ++c) w.push_back(rng.rational(4, 5));
      if (!godbersen::is_zero(w)) dirs.push_back(w);
    }
    for (std::size_t d = 0; d < dirs.size(); ++d) {
      const Vector& w1 = dirs[d];
      const Vector& w2 = dirs[(d + 1) % dirs.size()];
      CHECK(godbersen::support(sum, w1) == godbersen::support(k, w1) + godbersen::support(l, w1));
      if (!godbersen::is_zero(w1 + w2)) {
        CHECK(godbersen::support(k, w1 + w2) <= godbersen::support(k, w1) + godbersen::support(k, w2));
      }
    }
  }
}

TEST_CASE("transform examples") {
  const Polytope shifted = godbersen::transform(square(), la::identity(2), V({"1", "1"}));
  CHECK(shifted.volume() == Rat(1));
  CHECK(shifted.vertices().front() == V({"1", "1"}));
  const Polytope neg = godbersen::transform(triangle(), Matrix{{Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}}, V({"0", "0"}));
  CHECK(neg.vertices() == std::vector<Point>{V({"-1", "0"}), V({"0", "-1"}), V({"0", "0"})});
  CHECK(neg == godbersen::reflect(triangle()));
  CHECK(godbersen::scale(triangle(), Rat(2)).volume() == Rat(2));
  CHECK_THROWS_AS(godbersen::transform(square(), Matrix{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}, V({"0", "0"})),
                  godbersen::SingularMatrix);
  CHECK_THROWS_AS(godbersen::scale(square(), Rat(0)), godbersen::SingularMatrix);
}

TEST_CASE("volume and centroid transform exactly") {
  godbersen::Rng rng(3);
  for (const auto& k : small_corpus(4)) {
    const Matrix a = random_invertible(rng, k.dim());
    Point t;
    for (std::size_t c = 0; c < k.dim(); ++c) t.push_back(rng.rational(2, 3));
    const Polytope image = godbersen::transform(k, a, t);
    CHECK(image.volume() == godbersen::abs(la::determinant(a)) * k.volume());
    CHECK(image.centroid() == la::apply(a, k.centroid()) + t);
  }
}

TEST_CASE("minkowski_sum examples") {
  const Polytope sq2 = godbersen::minkowski_sum(square(), square());
  CHECK(sq2 == godbersen::scale(square(), Rat(2)));
  CHECK(sq2.volume() == Rat(4));
  const Polytope hex = godbersen::minkowski_sum(triangle(), godbersen::reflect(triangle()));
  CHECK(hex.vertices().size() == 6);
  CHECK(hex.volume() == Rat(3));
  CHECK(oracle::pulling_measure(hex.vertices()).volume == Rat(3));
  CHECK_THROWS_AS(godbersen::minkowski_sum(square(), cube(3)), godbersen::DimensionMismatch);
}

TEST_CASE("minkowski_sum with a point is a translation") {
  // A point is not full-dimensional, so add the translation vector to every vertex directly.
  const Point p = V({"2/3", "-1"});
  const Polytope k = random_hull(2, 7, 5);
  std::vector<Point> moved;
  for (const auto& v : k.vertices()) moved.push_back(v + p);
  CHECK(godbersen::build_hull(moved) == godbersen::translate(k, p));
}

TEST_CASE("volume examples") {
  CHECK(cube(3).volume() == Rat(1));
  CHECK(simplex(3).volume() == Rat(1, 6));
  CHECK(simplex(4).volume() == Rat(1, 24));
  CHECK(cross(3).volume() == Rat(4, 3));
}

TEST_CASE("volume and centroid agree with a pulling triangulation") {
  for (const auto& k : small_corpus(5)) {
    const auto m = oracle::pulling_measure(k.vertices());
    CHECK(m.volume == k.volume());
    CHECK(m.centroid == k.centroid());
  }
}

TEST_CASE("pyramid identity reproduces the volume") {
  godbersen::Rng rng(19);
  for (const auto& k : small_corpus(5)) {
    const Point& c = k.interior_point();
    Rat total(0);
    for (const auto& f : k.facets()) total += (f.offset - godbersen::dot(c, f.normal)) * f.scaled_measure;
    CHECK(total / Rat(static_cast<long>(k.dim())) == k.volume());
  }
}

TEST_CASE("centroid examples") {
  CHECK(triangle().centroid() == V({"1/3", "1/3"}));
  CHECK(square().centroid() == V({"1/2", "1/2"}));
  CHECK(simplex(3).centroid() == V({"1/4", "1/4", "1/4"}));
  const Polytope s = godbersen::build_hull({V({"0", "0"}), V({"4", "1"}), V({"1", "5"})});
  CHECK(s.centroid() == V({"5/3", "2"}));
}

TEST_CASE("includes examples") {
  const Polytope k0 = centered_square();
  CHECK(godbersen::includes(godbersen::scale(k0, Rat(2)), k0));
  CHECK_FALSE(godbersen::includes(square(), godbersen::scale(square(), Rat(2))));
  const Polytope t0 = godbersen::translate(triangle(), -triangle().centroid());
  const Polytope neg = godbersen::reflect(t0);
  CHECK(neg.vertices() == std::vector<Point>{V({"-2/3", "1/3"}), V({"1/3", "-2/3"}), V({"1/3", "1/3"})});
  const Polytope outer = godbersen::scale(t0, Rat(2));
  CHECK(godbersen::includes(outer, neg));
  for (const auto& f : outer.facets()) {
    bool tight = false;
    for (const auto& v : neg.vertices()) tight = tight || godbersen::dot(v, f.normal) == f.offset;
    CHECK(tight);
  }
  CHECK_THROWS_AS(godbersen::includes(square(), cube(3)), godbersen::DimensionMismatch);
}

TEST_CASE("includes agrees with point membership sampling") {
  godbersen::Rng rng(23);
  const auto corpus = small_corpus(3);
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (std::size_t j = 0; j < corpus.size(); ++j) {
      const Polytope& outer = corpus[i];
      const Polytope& inner = corpus[j];
      if (outer.dim() != inner.dim() || (i + j) % 3 != 0) continue;
      const auto planes = oracle::brute_force_facets(outer.vertices());
      auto inside = [&](const Point& p) {
        for (const auto& pl : planes) {
          if (godbersen::dot(pl.normal, p) > pl.offset) return false;
        }
        return true;
      };
      // Random points of inner: vertices plus random convex combinations.
      bool sampled_all_inside = true;
      for (const auto& v : inner.vertices()) sampled_all_inside = sampled_all_inside && inside(v);
      for (int s = 0; s < 1000 && sampled_all_inside; ++s) {
        Point p(inner.dim(), Rat(0));
        Rat total(0);
        std::vector<Rat> weights;
        for (std::size_t v = 0; v < inner.vertices().size(); ++v) {
          weights.emplace_back(rng.uniform(0, 9));
          total += weights.back();
        }
        if (total.is_zero()) continue;
        for (std::size_t v = 0; v < inner.vertices().size(); ++v) {
          p = p + (weights[v] / total) * inner.vertices()[v];
        }
        sampled_all_inside = inside(p);
      }
      CHECK(godbersen::includes(outer, inner) == sampled_all_inside);
    }
  }
}
