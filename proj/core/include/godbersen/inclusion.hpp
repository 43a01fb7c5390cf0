#pragma once

#include <cstddef>
#include <vector>

#include "godbersen/polytope.hpp"

namespace godbersen {

struct TightnessEntry {
  Vector normal;
  Rat lhs;  // h_{-K0}(w)
  Rat rhs;  // n h_{K0}(w)
  bool tight = false;
};

/// Facet-by-facet comparison of -K0 against n K0, K0 = K - centroid(K).
struct TightnessProfile {
  std::vector<TightnessEntry> entries;

  std::size_t tight_count() const;
  bool all_tight() const { return tight_count() == entries.size(); }
};

/// K - centroid(K).
Polytope centered(const Polytope& k);

/// -K0 is contained in n K0. Throws TheoremViolation if not.
bool inclusion_in_nK(const Polytope& k);

/// Throws TheoremViolation if some lhs exceeds its rhs.
TightnessProfile tightness_profile(const Polytope& k);

/// Integral of t s(t) for the section profile of K - centroid(K) along w.
///
/// With r = -t the sections K0 intersected with {x . w = t} are the sections
/// at -r u along u = w/|w| up to the positive factor |w|, and the integral
/// changes sign only, so "= 0" holds in either orientation.
Rat directional_moment(const Polytope& k, const Vector& w);

/// Same integral without centering K first.
Rat raw_moment(const Polytope& k, const Vector& w);

/// h_K(w) + h_K(-w).
Rat width(const Polytope& k, const Vector& w);

}  // namespace godbersen
