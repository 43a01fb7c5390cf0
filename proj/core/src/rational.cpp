#include "godbersen/rational.hpp"

#include <cctype>
#include <sstream>

#include "godbersen/errors.hpp"

namespace godbersen {

namespace {

bool valid_integer_text(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!valid_integer_text(s)) throw ParseError("malformed rational: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rat::Rat(long num, long den) {
  if (den == 0) throw ParseError("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  const mpz_class num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("sign not allowed in denominator: '" + std::string(text) + "'");
  }
  const mpz_class den = parse_integer(den_text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rat(mpq_class(num, den));
}

std::string Rat::str() const { return q_.get_str(10); }

Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rat abs(const Rat& r) { return r.sign() < 0 ? -r : r; }

Rat pow(const Rat& base, unsigned exponent) {
  Rat result(1);
  Rat b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

Rat dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  mpq_class acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i].raw() * b[i].raw();
  return Rat(acc);
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator-(const Vector& a) {
  Vector r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(-x);
  return r;
}

Vector operator*(const Rat& s, const Vector& a) {
  Vector r;
  r.reserve(a.size());
  for (const auto& x : a) r.push_back(s * x);
  return r;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector primitive_integer(const Vector& v) {
  mpz_class lcm_den = 1;
  for (const auto& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  mpz_class g = 0;
  for (const auto& x : v) {
    mpz_class k = x.num() * (lcm_den / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), k.get_mpz_t());
    ints.push_back(std::move(k));
  }
  if (g == 0) throw std::invalid_argument("primitive_integer: zero vector");
  Vector out;
  out.reserve(v.size());
  for (auto& k : ints) out.emplace_back(mpz_class(k / g));
  return out;
}

std::string to_string(const Vector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace godbersen

std::size_t std::hash<godbersen::Rat>::operator()(const godbersen::Rat& r) const noexcept {
  const std::size_t h1 = mpz_get_ui(r.raw().get_num_mpz_t()) * 0x9E3779B97F4A7C15ULL;
  const std::size_t h2 = mpz_get_ui(r.raw().get_den_mpz_t());
  return h1 ^ (h2 + 0x7F4A7C15ULL + (h1 << 6U) + (h1 >> 2U)) ^ static_cast<std::size_t>(r.sign());
}
