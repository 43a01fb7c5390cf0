#include "godbersen/ak_solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "godbersen/errors.hpp"
#include "godbersen/linalg.hpp"

namespace godbersen {

System ak_system(const Polytope& k) {
  const long n = static_cast<long>(k.dim());
  const Rat outer(n, n + 1);
  const Rat inner(1, n + 1);
  System s;
  s.dim = k.dim();
  for (const auto& f : k.facets()) {
    s.halfspaces.push_back({f.normal, outer * support(k, f.normal) - inner * support(k, -f.normal)});
  }
  return s;
}

bool satisfies(const System& s, const Point& x) {
  return std::all_of(s.halfspaces.begin(), s.halfspaces.end(),
                     [&](const HalfSpace& h) { return dot(h.normal, x) <= h.rhs; });
}

namespace {

// Bitset over the original row indices a derived row was combined from.
using Origins = std::vector<std::uint64_t>;

struct Row {
  Vector coeffs;
  Rat rhs;
  Origins origins;
};

std::size_t popcount(const Origins& o) {
  std::size_t c = 0;
  for (auto w : o) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

Origins merge(const Origins& a, const Origins& b) {
  Origins r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] |= b[i];
  return r;
}

// Positive rescaling so the first nonzero coefficient is +-1.
void normalize(Row& r) {
  for (const auto& c : r.coeffs) {
    if (c.is_zero()) continue;
    const Rat scale = Rat(1) / abs(c);
    for (auto& x : r.coeffs) x *= scale;
    r.rhs *= scale;
    return;
  }
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Keeps, for every normalized coefficient vector, only the tightest row.
// Returns false when a row 0 <= rhs with rhs < 0 shows up.
bool dedupe(std::vector<Row>& rows) {
  std::map<Vector, std::size_t, decltype(&lex_less)> best(&lex_less);
  std::vector<Row> kept;
  for (auto& r : rows) {
    if (is_zero(r.coeffs)) {
      if (r.rhs.sign() < 0) return false;
      continue;
    }
    auto [it, inserted] = best.emplace(r.coeffs, kept.size());
    if (inserted) {
      kept.push_back(std::move(r));
      continue;
    }
    Row& cur = kept[it->second];
    if (r.rhs < cur.rhs || (r.rhs == cur.rhs && popcount(r.origins) < popcount(cur.origins))) {
      cur = std::move(r);
    }
  }
  rows = std::move(kept);
  return true;
}

struct Elimination {
  bool feasible = true;
  // levels[L] holds rows over variables 0..L-1.
  std::vector<std::vector<Row>> levels;
};

Elimination eliminate(const System& s, bool prune) {
  const std::size_t n = s.dim;
  const std::size_t words = (s.halfspaces.size() + 63) / 64;
  Elimination out;
  out.levels.resize(n + 1);
  std::vector<Row> rows;
  for (std::size_t i = 0; i < s.halfspaces.size(); ++i) {
    Row r{s.halfspaces[i].normal, s.halfspaces[i].rhs, Origins(words, 0)};
    r.origins[i / 64] |= (std::uint64_t{1} << (i % 64));
    normalize(r);
    rows.push_back(std::move(r));
  }
  if (!dedupe(rows)) {
    out.feasible = false;
    return out;
  }
  out.levels[n] = rows;
  for (std::size_t var = n; var-- > 0;) {
    const std::size_t eliminated = n - var;
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      const int sg = r.coeffs[var].sign();
      if (sg > 0) pos.push_back(std::move(r));
      else if (sg < 0) neg.push_back(std::move(r));
      else next.push_back(std::move(r));
    }
    for (const auto& p : pos) {
      for (const auto& q : neg) {
        Origins origins = merge(p.origins, q.origins);
        // Chernikov/Kohler: a row built from more than (eliminated + 1)
        // originals is implied by the others.
        if (prune && popcount(origins) > eliminated + 1) continue;
        const Rat sp = Rat(1) / p.coeffs[var];
        const Rat sq = Rat(1) / (-q.coeffs[var]);
        Row r;
        r.coeffs.reserve(n);
        for (std::size_t c = 0; c < n; ++c) r.coeffs.push_back(sp * p.coeffs[c] + sq * q.coeffs[c]);
        r.coeffs[var] = 0;
        r.rhs = sp * p.rhs + sq * q.rhs;
        r.origins = std::move(origins);
        normalize(r);
        next.push_back(std::move(r));
      }
    }
    if (!dedupe(next)) {
      out.feasible = false;
      return out;
    }
    rows = std::move(next);
    out.levels[var] = rows;
  }
  return out;
}

std::optional<FeasibilityResult> back_substitute(const System& s, const Elimination& e) {
  const std::size_t n = s.dim;
  FeasibilityResult result;
  result.status = Feasibility::Feasible;
  result.unique = true;
  Point x(n, Rat(0));
  for (std::size_t var = 0; var < n; ++var) {
    std::optional<Rat> lo, hi;
    for (const auto& r : e.levels[var + 1]) {
      const Rat& c = r.coeffs[var];
      if (c.is_zero()) continue;
      Rat bound = r.rhs;
      for (std::size_t i = 0; i < var; ++i) bound -= r.coeffs[i] * x[i];
      bound /= c;
      if (c.sign() > 0) {
        if (!hi || bound < *hi) hi = bound;
      } else {
        if (!lo || bound > *lo) lo = bound;
      }
    }
    if (lo && hi) {
      if (*lo > *hi) return std::nullopt;
      x[var] = (*lo + *hi) / Rat(2);
      if (*lo != *hi) result.unique = false;
    } else if (lo) {
      x[var] = *lo + Rat(1);
      result.unique = false;
    } else if (hi) {
      x[var] = *hi - Rat(1);
      result.unique = false;
    } else {
      x[var] = 0;
      result.unique = false;
    }
  }
  if (!satisfies(s, x)) return std::nullopt;
  result.witness = std::move(x);
  return result;
}

}  // namespace

FeasibilityResult fm_feasible(const System& s) {
  for (const auto& h : s.halfspaces) {
    if (h.normal.size() != s.dim) throw DimensionMismatch("fm_feasible: row length differs from dimension");
  }
  for (bool prune : {true, false}) {
    const Elimination e = eliminate(s, prune);
    // Every derived row is implied by the input, so infeasibility is sound
    // with or without pruning.
    if (!e.feasible) return FeasibilityResult{};
    if (auto r = back_substitute(s, e)) return *r;
  }
  throw std::logic_error("fm_feasible: back-substitution failed on a feasible projection");
}

Point ak_point(const Polytope& k) {
  const System s = ak_system(k);
  const FeasibilityResult r = fm_feasible(s);
  if (!r.feasible()) throw TheoremViolation("ak_point: A_K is empty");
  const Point& a = *r.witness;
  // h_{-K+a}(w) <= n h_{K-a}(w), i.e. h_K(-w) + a.w <= n (h_K(w) - a.w).
  const Rat n(static_cast<long>(k.dim()));
  for (const auto& f : k.facets()) {
    const Rat aw = dot(a, f.normal);
    if (support(k, -f.normal) + aw > n * (support(k, f.normal) - aw)) {
      throw TheoremViolation("ak_point: witness violates the support inequality at " + to_string(f.normal));
    }
  }
  return a;
}

std::uint64_t default_subset_cap() {
  constexpr std::uint64_t kDefault = 200000;
  if (const char* env = std::getenv("GODBERSEN_SUBSET_CAP")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      return kDefault;
    }
  }
  return kDefault;
}

namespace {

// C(m, k), saturating at `cap + 1`.
std::uint64_t capped_binomial(std::uint64_t m, std::uint64_t k, std::uint64_t cap) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (m - k + i) / i;
    if (r > cap) return cap + 1;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace

bool helly_audit(const System& s, std::uint64_t cap) {
  const std::size_t m = s.halfspaces.size();
  const std::size_t k = s.dim + 1;
  const bool full = fm_feasible(s).feasible();
  bool all_feasible = true;
  if (m <= k) {
    all_feasible = full;
  } else {
    if (capped_binomial(m, k, cap) > cap) {
      throw CombinatorialBlowup("helly_audit: C(" + std::to_string(m) + ", " + std::to_string(k) +
                                ") exceeds the subset cap " + std::to_string(cap));
    }
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    System sub;
    sub.dim = s.dim;
    sub.halfspaces.resize(k);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) sub.halfspaces[i] = s.halfspaces[idx[i]];
      if (!fm_feasible(sub).feasible()) {
        all_feasible = false;
        break;
      }
      std::size_t i = k;
      while (i-- > 0 && idx[i] == m - k + i) {
      }
      if (i == static_cast<std::size_t>(-1)) break;
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (all_feasible != full) {
    throw TheoremViolation("helly_audit: subset feasibility disagrees with the full system");
  }
  return all_feasible;
}

bool gl_invariance_check(const Polytope& k, const Matrix& a) {
  const Polytope mapped = transform(k, a, Point(k.dim(), Rat(0)));
  const FeasibilityResult base = fm_feasible(ak_system(k));
  const System mapped_system = ak_system(mapped);
  const FeasibilityResult image = fm_feasible(mapped_system);
  if (base.status != image.status) return false;
  if (!base.feasible()) return true;
  // Facet normals of AK are positive multiples of A^{-T} w and supports are
  // preserved, so A a satisfies the mapped system whenever a satisfies the
  // original one.
  return satisfies(mapped_system, linalg::apply(a, *base.witness));
}

}  // namespace godbersen
