#include <doctest.h>

#include "godbersen/errors.hpp"
#include "godbersen/linalg.hpp"

using godbersen::Matrix;
using godbersen::Rat;
using godbersen::Vector;
namespace la = godbersen::linalg;

TEST_CASE("determinant and inverse") {
  const Matrix a{{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
  CHECK(la::determinant(a) == Rat(5));
  const Matrix inv = la::inverse(a);
  CHECK(la::multiply(a, inv) == la::identity(2));
  CHECK(la::determinant(Matrix{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}).is_zero());
  CHECK_THROWS_AS(la::inverse(Matrix{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}), godbersen::SingularMatrix);
  // Row swap changes the sign.
  CHECK(la::determinant(Matrix{{Rat(0), Rat(1)}, {Rat(1), Rat(0)}}) == Rat(-1));
}

TEST_CASE("solve and null space") {
  const Matrix a{{Rat(1), Rat(1)}, {Rat(1), Rat(-1)}};
  const auto x = la::solve(a, Vector{Rat(3), Rat(1)});
  REQUIRE(x);
  CHECK(*x == Vector{Rat(2), Rat(1)});
  CHECK_FALSE(la::solve(Matrix{{Rat(1), Rat(1)}, {Rat(2), Rat(2)}}, Vector{Rat(1), Rat(2)}));

  const auto ns = la::null_space(Matrix{{Rat(1), Rat(1), Rat(1)}}, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(godbersen::dot(v, Vector{Rat(1), Rat(1), Rat(1)}).is_zero());
}

TEST_CASE("hyperplane normal and affine rank") {
  const std::vector<godbersen::Point> tri{{Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(0)}, {Rat(0), Rat(0), Rat(1)}};
  const auto w = la::hyperplane_normal(tri);
  REQUIRE(w);
  CHECK(godbersen::primitive_integer(*w) == Vector{Rat(1), Rat(1), Rat(1)});
  CHECK(la::affine_rank(tri) == 2);
  const std::vector<godbersen::Point> collinear{{Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(1)}, {Rat(2), Rat(2), Rat(2)}};
  CHECK_FALSE(la::hyperplane_normal(collinear));
  CHECK(la::rank(Matrix{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}}) == 1);
}
