#include "godbersen/concave.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "godbersen/errors.hpp"
#include "godbersen/inclusion.hpp"
#include "godbersen/random.hpp"

namespace godbersen {

PLConcave::PLConcave(std::vector<Rat> knots, std::vector<Rat> values)
    : knots_(std::move(knots)), values_(std::move(values)) {
  if (knots_.size() < 2 || knots_.size() != values_.size()) {
    throw NotConcave("PLConcave: need at least two knots and one value per knot");
  }
  if (knots_.front() != Rat(0) || knots_.back() != Rat(1)) {
    throw NotConcave("PLConcave: domain must be exactly [0, 1]");
  }
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (knots_[i] >= knots_[i + 1]) throw NotConcave("PLConcave: knots must be strictly increasing");
  }
  for (const auto& v : values_) {
    if (v.sign() < 0) throw NotConcave("PLConcave: negative value " + v.str());
  }
  const auto s = slopes();
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] < s[i + 1]) throw NotConcave("PLConcave: slopes increase at knot " + knots_[i + 1].str());
  }
}

std::vector<Rat> PLConcave::slopes() const {
  std::vector<Rat> s;
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    s.push_back((values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]));
  }
  return s;
}

bool PLConcave::is_linear() const {
  const auto s = slopes();
  return std::all_of(s.begin(), s.end(), [&](const Rat& x) { return x == s.front(); });
}

Rat PLConcave::operator()(const Rat& r) const {
  if (r < Rat(0) || r > Rat(1)) throw std::out_of_range("PLConcave: argument outside [0, 1]");
  for (std::size_t i = 0; i + 1 < knots_.size(); ++i) {
    if (r <= knots_[i + 1]) {
      const Rat slope = (values_[i + 1] - values_[i]) / (knots_[i + 1] - knots_[i]);
      return values_[i] + slope * (r - knots_[i]);
    }
  }
  return values_.back();
}

PLConcave PLConcave::scaled(const Rat& c) const {
  std::vector<Rat> v;
  v.reserve(values_.size());
  for (const auto& x : values_) v.push_back(c * x);
  return PLConcave(knots_, std::move(v));
}

Rat godbersen_integral(const PLConcave& f, unsigned m) {
  if (m < 2) throw InvalidM("godbersen_integral: m must be at least 2, got " + std::to_string(m));
  const Polynomial weight({-Rat(1, static_cast<long>(m) + 1), Rat(1)});
  const auto& knots = f.knots();
  const auto& values = f.values();
  Rat total(0);
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    const Rat slope = (values[i + 1] - values[i]) / (knots[i + 1] - knots[i]);
    const Polynomial piece({values[i] - slope * knots[i], slope});
    total += (weight * pow(piece, m - 1)).integrate(knots[i], knots[i + 1]);
  }
  return total;
}

ConcaveIntegralResult concave_integral_check(const PLConcave& f, unsigned m) {
  ConcaveIntegralResult r;
  r.value = godbersen_integral(f, m);
  r.nonneg = r.value.sign() >= 0;
  r.equality = r.value.is_zero();
  r.equality_characterized = f.values().back().is_zero() && f.is_linear();
  if (!r.nonneg) throw LemmaViolation("concave_integral_check: negative integral " + r.value.str());
  if (r.equality != r.equality_characterized) {
    throw LemmaViolation("concave_integral_check: equality does not match f(1) = 0 and f linear");
  }
  return r;
}

PLConcave random_pl_concave(std::uint64_t seed) {
  Rng rng(seed);
  const long interior = rng.uniform(0, 6);
  std::vector<Rat> knots{Rat(0), Rat(1)};
  for (long i = 0; i < interior; ++i) {
    const long den = rng.uniform(2, 12);
    knots.emplace_back(rng.uniform(1, den - 1), den);
  }
  std::sort(knots.begin(), knots.end());
  knots.erase(std::unique(knots.begin(), knots.end()), knots.end());

  const std::size_t pieces = knots.size() - 1;
  std::vector<Rat> slopes;
  const bool single = rng.uniform(0, 3) == 0;
  const Rat first = rng.rational(5, 4);
  for (std::size_t i = 0; i < pieces; ++i) slopes.push_back(single ? first : rng.rational(5, 4));
  std::sort(slopes.begin(), slopes.end(), std::greater<>());

  std::vector<Rat> values{Rat(0)};
  for (std::size_t i = 0; i < pieces; ++i) {
    values.push_back(values.back() + slopes[i] * (knots[i + 1] - knots[i]));
  }
  Rat lowest = *std::min_element(values.begin(), values.end());
  const Rat lift = rng.uniform(0, 1) == 0 ? Rat(0) : abs(rng.rational(2, 4));
  for (auto& v : values) v = v - lowest + lift;
  return PLConcave(std::move(knots), std::move(values));
}

bool slice_root_concavity(const Polytope& k, const Vector& w, std::size_t samples) {
  if (samples < 3) throw std::invalid_argument("slice_root_concavity: need at least 3 samples");
  const SectionProfile s = section_profile(k, w);
  const std::size_t n = k.dim();

  if (n == 2) {
    Rat previous_slope;
    for (std::size_t i = 0; i < s.pieces().size(); ++i) {
      const auto& p = s.pieces()[i];
      if (p.degree() > 1) return false;
      const Rat slope = p.coeff(1);
      if (i > 0) {
        if (slope > previous_slope) return false;
        if (s.pieces()[i - 1](s.breakpoints()[i]) != p(s.breakpoints()[i])) return false;
      }
      previous_slope = slope;
    }
    return true;
  }

  const Rat step = (s.upper() - s.lower()) / Rat(static_cast<long>(samples - 1));
  const double root = 1.0 / static_cast<double>(n - 1);
  std::vector<double> g;
  g.reserve(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    const Rat t = s.lower() + Rat(static_cast<long>(i)) * step;
    const double value = s(t).to_double();
    if (value < 0) return false;
    g.push_back(std::pow(value, root));
  }
  for (std::size_t d = 1; 2 * d < samples; ++d) {
    for (std::size_t i = 0; i + 2 * d < samples; ++i) {
      const double chord = 0.5 * (g[i] + g[i + 2 * d]);
      if (g[i + d] < chord - 1e-9 * chord) return false;
    }
  }
  return true;
}

namespace {

// p(a + b x)
Polynomial compose_affine(const Polynomial& p, const Rat& a, const Rat& b) {
  const Polynomial inner({a, b});
  Polynomial acc;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * inner + Polynomial::constant(p.coeffs()[i]);
  return acc;
}

}  // namespace

Rat bridge_integral(const Polytope& k, const Vector& w) {
  const Polytope k0 = centered(k);
  const SectionProfile s = section_profile(k0, w);
  const Rat top = support(k0, w);
  const Rat span = width(k0, w);
  const Polynomial weight({-Rat(1, static_cast<long>(k.dim()) + 1), Rat(1)});
  Rat total(0);
  for (std::size_t i = 0; i < s.pieces().size(); ++i) {
    // t = top - span * r
    const Polynomial q = compose_affine(s.pieces()[i], top, -span);
    const Rat r_lo = (top - s.breakpoints()[i + 1]) / span;
    const Rat r_hi = (top - s.breakpoints()[i]) / span;
    total += (weight * q).integrate(r_lo, r_hi);
  }
  return total;
}

BrunnMinkowskiResult bm_check(const Polytope& k, const Polytope& l) {
  if (k.dim() != l.dim()) throw DimensionMismatch("bm_check: dimension mismatch");
  const double inv_n = 1.0 / static_cast<double>(k.dim());
  BrunnMinkowskiResult r;
  r.lhs = std::pow(minkowski_sum(k, l).volume().to_double(), inv_n);
  r.rhs = std::pow(k.volume().to_double(), inv_n) + std::pow(l.volume().to_double(), inv_n);
  r.ok = r.lhs >= r.rhs - 1e-9 * r.rhs;
  r.equality = std::abs(r.lhs - r.rhs) <= 1e-9 * r.rhs;
  return r;
}

}  // namespace godbersen
