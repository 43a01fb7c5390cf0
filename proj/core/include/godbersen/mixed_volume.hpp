#pragma once

#include <cstddef>
#include <vector>

#include "godbersen/polytope.hpp"

namespace godbersen {

/// Coefficients of Vol(K + tL) = sum_j C(n, j) m_j t^j, where
/// m_j = V(K[n-j], L[j]). coeffs[0] = Vol(K), coeffs[n] = Vol(L).
struct MixedVolumeProfile {
  std::size_t n = 0;
  std::vector<Rat> coeffs;
};

/// V(K[1], T[n-1]) via the facet formula (1/n) sum_F h_K(w_F) mu_F over the
/// facets of T. Exact because mu_F carries the 1/|w_F| factor.
Rat mv_first(const Polytope& k, const Polytope& t);

/// Interpolates Vol(K + tL) at t = 1..n+1 and solves the Vandermonde system.
/// The result is cross-checked against mv_first on both ends; a mismatch
/// throws TheoremViolation.
MixedVolumeProfile mv_profile(const Polytope& k, const Polytope& l);

struct GodbersenEntry {
  std::size_t j = 0;
  Rat mixed;       // V(K[j], -K[n-j])
  Rat binom;       // C(n, j)
  Rat ratio;       // mixed / (binom Vol K)
  Rat bound_nmin;  // n^min(j, n-j)
  bool nmin_ok = false;
  /// lambda^j (1-lambda)^(n-j) mixed <= Vol K on the fixed lambda grid.
  /// A grid can falsify the bound but never certify it.
  bool artstein_ok = false;
};

struct GodbersenReport {
  std::size_t n = 0;
  Rat volume;
  std::vector<GodbersenEntry> entries;  // j = 1..n-1
  bool is_simplex = false;
};

/// lambda values used for the product bound: 1/10, ..., 9/10 and j/n.
std::vector<Rat> lambda_grid(std::size_t j, std::size_t n);

/// Ratios V(K[j], -K[n-j]) / (C(n,j) Vol K) for j = 1..n-1. Throws
/// TheoremViolation if the ratio exceeds 1 at j = 1 or j = n-1; other j are
/// reported only.
GodbersenReport godbersen_report(const Polytope& k);

}  // namespace godbersen
