#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "godbersen/polytope.hpp"

namespace godbersen {

/// {a : a . normal <= rhs}. The normal is never normalized.
struct HalfSpace {
  Vector normal;
  Rat rhs;
};

struct System {
  std::size_t dim = 0;
  std::vector<HalfSpace> halfspaces;
};

enum class Feasibility { Feasible, Infeasible };

struct FeasibilityResult {
  Feasibility status = Feasibility::Infeasible;
  std::optional<Point> witness;
  /// The feasible region is a single point.
  bool unique = false;

  bool feasible() const { return status == Feasibility::Feasible; }
};

/// One halfspace per facet F of K:
///   a . w_F <= n/(n+1) h_K(w_F) - 1/(n+1) h_K(-w_F).
System ak_system(const Polytope& k);

/// Exact Fourier-Motzkin feasibility with back-substitution.
///
/// Variables are eliminated from last to first. The witness takes, for each
/// variable in turn, the midpoint of its interval, 0 when unconstrained,
/// and lower + 1 or upper - 1 when bounded on one side only.
FeasibilityResult fm_feasible(const System& s);

/// A point of A_K, certified against every facet before returning.
/// Throws TheoremViolation if the system is infeasible.
Point ak_point(const Polytope& k);

/// Subset cap for helly_audit; GODBERSEN_SUBSET_CAP overrides the default.
std::uint64_t default_subset_cap();

/// True iff every (n+1)-subset of halfspaces is feasible. Also asserts the
/// result agrees with fm_feasible on the whole system (TheoremViolation).
/// Throws CombinatorialBlowup when C(m, n+1) exceeds `cap`.
bool helly_audit(const System& s, std::uint64_t cap = default_subset_cap());

/// Feasibility of A_K and A_{AK} agree, and A maps the witness for K into
/// A_{AK}. Throws SingularMatrix when det A = 0.
bool gl_invariance_check(const Polytope& k, const Matrix& a);

bool satisfies(const System& s, const Point& x);

}  // namespace godbersen
