#include "godbersen/inclusion.hpp"

#include <algorithm>

#include "godbersen/errors.hpp"

namespace godbersen {

std::size_t TightnessProfile::tight_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const TightnessEntry& e) { return e.tight; }));
}

Polytope centered(const Polytope& k) { return translate(k, -k.centroid()); }

bool inclusion_in_nK(const Polytope& k) {
  const Polytope k0 = centered(k);
  const bool inside = includes(scale(k0, Rat(static_cast<long>(k.dim()))), reflect(k0));
  if (!inside) throw TheoremViolation("inclusion_in_nK: -K0 is not contained in n K0");
  return inside;
}

TightnessProfile tightness_profile(const Polytope& k) {
  const Polytope k0 = centered(k);
  const Rat n(static_cast<long>(k.dim()));
  TightnessProfile profile;
  for (const auto& f : k0.facets()) {
    TightnessEntry e;
    e.normal = f.normal;
    e.lhs = support(k0, -f.normal);
    e.rhs = n * support(k0, f.normal);
    if (e.lhs > e.rhs) {
      throw TheoremViolation("tightness_profile: h(-u) > n h(u) at " + to_string(f.normal));
    }
    e.tight = e.lhs == e.rhs;
    profile.entries.push_back(std::move(e));
  }
  return profile;
}

Rat directional_moment(const Polytope& k, const Vector& w) { return raw_moment(centered(k), w); }

Rat raw_moment(const Polytope& k, const Vector& w) { return section_profile(k, w).moment(1); }

Rat width(const Polytope& k, const Vector& w) { return support(k, w) + support(k, -w); }

}  // namespace godbersen
