#include "godbersen/mixed_volume.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "godbersen/errors.hpp"
#include "godbersen/linalg.hpp"

namespace godbersen {

namespace {

Rat binomial(std::size_t n, std::size_t k) {
  Rat r(1);
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * Rat(static_cast<long>(n - k + i)) / Rat(static_cast<long>(i));
  }
  return r;
}

bool lex_less(const Vector& a, const Vector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Rat mv_first(const Polytope& k, const Polytope& t) {
  if (k.dim() != t.dim()) throw DimensionMismatch("mv_first: dimension mismatch");
  Rat total(0);
  for (const auto& f : t.facets()) total += support(k, f.normal) * f.scaled_measure;
  return total / Rat(static_cast<long>(t.dim()));
}

MixedVolumeProfile mv_profile(const Polytope& k, const Polytope& l) {
  if (k.dim() != l.dim()) throw DimensionMismatch("mv_profile: dimension mismatch");
  const std::size_t n = k.dim();

  // K + tL has the same vertex pairs (v, u) for every t > 0, so the full
  // pairwise hull is only needed once.
  std::map<Point, std::pair<std::size_t, std::size_t>, decltype(&lex_less)> pair_of(&lex_less);
  std::vector<Point> sums;
  for (std::size_t a = 0; a < k.vertices().size(); ++a) {
    for (std::size_t b = 0; b < l.vertices().size(); ++b) {
      Point s = k.vertices()[a] + l.vertices()[b];
      pair_of.emplace(s, std::make_pair(a, b));
      sums.push_back(std::move(s));
    }
  }
  const Polytope unit_sum = build_hull(sums);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& v : unit_sum.vertices()) pairs.push_back(pair_of.at(v));

  Matrix vandermonde;
  Vector values;
  for (std::size_t node = 1; node <= n + 1; ++node) {
    const Rat t(static_cast<long>(node));
    Vector row;
    Rat power(1);
    for (std::size_t j = 0; j <= n; ++j) {
      row.push_back(power);
      power *= t;
    }
    vandermonde.push_back(std::move(row));
    if (node == 1) {
      values.push_back(unit_sum.volume());
      continue;
    }
    std::vector<Point> pts;
    pts.reserve(pairs.size());
    for (const auto& [a, b] : pairs) pts.push_back(k.vertices()[a] + t * l.vertices()[b]);
    values.push_back(build_hull(pts).volume());
  }
  const auto poly = linalg::solve(std::move(vandermonde), std::move(values));
  if (!poly) throw std::logic_error("mv_profile: singular Vandermonde system");

  MixedVolumeProfile profile;
  profile.n = n;
  for (std::size_t j = 0; j <= n; ++j) profile.coeffs.push_back((*poly)[j] / binomial(n, j));

  if (profile.coeffs.front() != k.volume() || profile.coeffs.back() != l.volume()) {
    throw TheoremViolation("mv_profile: end coefficients differ from the volumes");
  }
  if (profile.coeffs[1] != mv_first(l, k) || profile.coeffs[n - 1] != mv_first(k, l)) {
    throw TheoremViolation("mv_profile: interpolated coefficient disagrees with the facet formula");
  }
  return profile;
}

std::vector<Rat> lambda_grid(std::size_t j, std::size_t n) {
  std::vector<Rat> grid;
  for (long i = 1; i <= 9; ++i) grid.emplace_back(i, 10L);
  grid.emplace_back(static_cast<long>(j), static_cast<long>(n));
  return grid;
}

GodbersenReport godbersen_report(const Polytope& k) {
  const std::size_t n = k.dim();
  const MixedVolumeProfile profile = mv_profile(k, reflect(k));
  GodbersenReport report;
  report.n = n;
  report.volume = k.volume();
  report.is_simplex = k.is_simplex();
  for (std::size_t j = 1; j < n; ++j) {
    GodbersenEntry e;
    e.j = j;
    // coeffs[i] = V(K[n-i], (-K)[i]), so V(K[j], -K[n-j]) sits at n-j.
    e.mixed = profile.coeffs[n - j];
    e.binom = binomial(n, j);
    e.ratio = e.mixed / (e.binom * report.volume);
    e.bound_nmin = pow(Rat(static_cast<long>(n)), static_cast<unsigned>(std::min(j, n - j)));
    e.nmin_ok = e.mixed <= e.bound_nmin * report.volume;
    e.artstein_ok = true;
    for (const auto& lambda : lambda_grid(j, n)) {
      const Rat lhs = pow(lambda, static_cast<unsigned>(j)) *
                      pow(Rat(1) - lambda, static_cast<unsigned>(n - j)) * e.mixed;
      if (lhs > report.volume) e.artstein_ok = false;
    }
    if ((j == 1 || j == n - 1) && e.ratio > Rat(1)) {
      throw TheoremViolation("godbersen_report: ratio " + e.ratio.str() + " > 1 at j = " + std::to_string(j));
    }
    report.entries.push_back(std::move(e));
  }
  return report;
}

}  // namespace godbersen
