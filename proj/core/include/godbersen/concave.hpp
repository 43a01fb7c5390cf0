#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "godbersen/polytope.hpp"

namespace godbersen {

/// Nonnegative, concave, piecewise-linear function on [0, 1].
class PLConcave {
 public:
  /// Knots must be strictly increasing from 0 to 1, values nonnegative and
  /// slopes nonincreasing; otherwise throws NotConcave.
  PLConcave(std::vector<Rat> knots, std::vector<Rat> values);

  const std::vector<Rat>& knots() const { return knots_; }
  const std::vector<Rat>& values() const { return values_; }
  std::vector<Rat> slopes() const;
  /// All pieces share one slope, i.e. f is affine on [0, 1].
  bool is_linear() const;

  Rat operator()(const Rat& r) const;
  PLConcave scaled(const Rat& c) const;

 private:
  std::vector<Rat> knots_;
  std::vector<Rat> values_;
};

/// Exact value of the integral over [0,1] of (r - 1/(m+1)) f(r)^(m-1).
/// Throws InvalidM for m < 2.
Rat godbersen_integral(const PLConcave& f, unsigned m);

struct ConcaveIntegralResult {
  Rat value;
  bool nonneg = false;
  bool equality = false;
  /// f(1) = 0 and f is linear.
  bool equality_characterized = false;
};

/// Throws LemmaViolation when the integral is negative or when equality and
/// its characterization disagree.
ConcaveIntegralResult concave_integral_check(const PLConcave& f, unsigned m);

/// Reproducible random member of the class: up to 8 knots, descending
/// random slopes integrated from 0 and shifted to a nonnegative minimum.
PLConcave random_pl_concave(std::uint64_t seed);

/// Midpoint concavity of s(t)^(1/(n-1)) for the section profile along w, on
/// `samples` equispaced points of the support (relative tolerance 1e-9).
/// For n = 2 the check is exact: s must be continuous with nonincreasing
/// slopes. Throws ZeroDirection for w = 0 and std::invalid_argument for
/// samples < 3.
bool slice_root_concavity(const Polytope& k, const Vector& w, std::size_t samples);

/// Integral over [0,1] of (r - 1/(n+1)) S(r) for K centered at its centroid,
/// where S(r) is the section density at depth r * width(w) below the
/// supporting hyperplane in direction w. Nonnegative iff h(-w) <= n h(w).
Rat bridge_integral(const Polytope& k, const Vector& w);

struct BrunnMinkowskiResult {
  double lhs = 0;
  double rhs = 0;
  bool ok = false;
  /// |lhs - rhs| <= 1e-9 rhs.
  bool equality = false;
};

BrunnMinkowskiResult bm_check(const Polytope& k, const Polytope& l);

}  // namespace godbersen
