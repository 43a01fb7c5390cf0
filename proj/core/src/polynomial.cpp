#include "godbersen/polynomial.hpp"

#include <sstream>

namespace godbersen {

Polynomial::Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial::Polynomial(Vector coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::linear_power(const Rat& root, unsigned k) {
  return pow(Polynomial({-root, Rat(1)}), k);
}

Rat Polynomial::operator()(const Rat& x) const {
  Rat acc(0);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Polynomial Polynomial::derivative() const {
  Vector d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(Rat(static_cast<long>(i)) * coeffs_[i]);
  return Polynomial(std::move(d));
}

Polynomial Polynomial::antiderivative() const {
  Vector a(coeffs_.size() + 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) a[i + 1] = coeffs_[i] / Rat(static_cast<long>(i + 1));
  return Polynomial(std::move(a));
}

Rat Polynomial::integrate(const Rat& a, const Rat& b) const {
  const Polynomial anti = antiderivative();
  return anti(b) - anti(a);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rat& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector r(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(r));
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(Rat(1));
  for (unsigned i = 0; i < k; ++i) result = result * p;
  return result;
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << coeffs_[i];
    if (i == 1) os << "*t";
    if (i > 1) os << "*t^" << i;
  }
  return os.str();
}

}  // namespace godbersen
