#pragma once

#include <string>
#include <vector>

#include "godbersen/harness.hpp"
#include "godbersen/polytope.hpp"

namespace fixtures {

using godbersen::Point;
using godbersen::Polytope;
using godbersen::Rat;
using godbersen::Vector;

inline Rat R(const std::string& s) { return Rat::parse(s); }

inline Vector V(std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(Rat::parse(x));
  return v;
}

inline Polytope simplex(std::size_t n) { return godbersen::generate({godbersen::GenKind::Simplex, n, 0, 0, 1}); }
inline Polytope cube(std::size_t n) { return godbersen::generate({godbersen::GenKind::Cube, n, 0, 0, 1}); }
inline Polytope cross(std::size_t n) { return godbersen::generate({godbersen::GenKind::CrossPolytope, n, 0, 0, 1}); }
inline Polytope triangle() { return simplex(2); }
inline Polytope square() { return cube(2); }

inline Polytope centered_square() {
  return godbersen::build_hull({V({"-1/2", "-1/2"}), V({"1/2", "-1/2"}), V({"1/2", "1/2"}), V({"-1/2", "1/2"})});
}

inline Polytope random_hull(std::size_t n, std::size_t verts, std::uint64_t seed, long den = 4) {
  return godbersen::generate({godbersen::GenKind::RandomHull, n, verts, seed, den});
}

inline Polytope random_symmetric(std::size_t n, std::size_t verts, std::uint64_t seed, long den = 3) {
  return godbersen::generate({godbersen::GenKind::RandomSymmetric, n, verts, seed, den});
}

/// Small mixed corpus used by property-style unit tests.
inline std::vector<Polytope> small_corpus(std::size_t per_dim = 6) {
  std::vector<Polytope> out;
  for (std::size_t n = 2; n <= 3; ++n) {
    out.push_back(simplex(n));
    out.push_back(cube(n));
    out.push_back(cross(n));
    for (std::size_t i = 0; i < per_dim; ++i) {
      out.push_back(random_hull(n, n + 2 + i % 5, 100 * n + i));
      if (i % 2 == 0) out.push_back(random_symmetric(n, 2 * n + 2, 300 * n + i));
    }
  }
  return out;
}

}  // namespace fixtures
