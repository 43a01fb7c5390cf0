#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>

#include "godbersen/rational.hpp"

namespace godbersen {

/// Univariate polynomial with exact rational coefficients, lowest degree
/// first. Trailing zero coefficients are trimmed, so the zero polynomial has
/// no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<Rat> coeffs);
  explicit Polynomial(Vector coeffs);

  static Polynomial constant(const Rat& c) { return Polynomial({c}); }
  /// (x - root)^k expanded.
  static Polynomial linear_power(const Rat& root, unsigned k);

  const Vector& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Degree, with -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }

  Rat operator()(const Rat& x) const;

  Polynomial derivative() const;
  Polynomial antiderivative() const;
  /// Exact definite integral over [a, b].
  Rat integrate(const Rat& a, const Rat& b) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rat& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rat& s) { return a *= s; }
  friend Polynomial operator*(const Rat& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  std::string str() const;

 private:
  void trim();
  Vector coeffs_;
};

Polynomial pow(const Polynomial& p, unsigned k);

}  // namespace godbersen
