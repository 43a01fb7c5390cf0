#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace godbersen {

/// Exact rational number, always kept in lowest terms with a positive
/// denominator. A thin value wrapper over GMP's mpq_class that never leaks
/// expression templates, so `auto x = a + b;` is always safe.
class Rat {
 public:
  Rat() = default;
  Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rat(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rat(long num, long den);
  explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rat(const mpz_class& z) : q_(z) {}

  /// Parses "k", "p/q" or "-p/q". Any equivalent fraction is accepted;
  /// throws ParseError on malformed text or a zero denominator.
  static Rat parse(std::string_view text);

  std::string str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
  Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
  Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& base, unsigned exponent);

using Vector = std::vector<Rat>;
using Point = Vector;
using Matrix = std::vector<Vector>;

Rat dot(const Vector& a, const Vector& b);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rat& s, const Vector& a);
bool is_zero(const Vector& v);

/// Positive rescaling of a nonzero vector to coprime integer entries.
Vector primitive_integer(const Vector& v);

std::string to_string(const Vector& v);

}  // namespace godbersen

template <>
struct std::hash<godbersen::Rat> {
  std::size_t operator()(const godbersen::Rat& r) const noexcept;
};
