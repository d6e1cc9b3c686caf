#include "kirchhoff/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace kirchhoff {

namespace {
const Rat kZero(0);
}

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::from_roots(const std::vector<std::pair<Rat, int>>& roots) {
  Polynomial p(std::vector<Rat>{Rat(1)});
  for (const auto& [root, mult] : roots) {
    if (mult < 0) throw std::invalid_argument("from_roots: negative multiplicity");
    Polynomial lin(std::vector<Rat>{-root, Rat(1)});
    for (int i = 0; i < mult; ++i) p = p * lin;
  }
  return p;
}

const Rat& Polynomial::coeff(int i) const {
  if (i < 0) throw std::out_of_range("coeff: negative index");
  if (i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(i)];
}

Rat Polynomial::eval(const Rat& t) const {
  Rat v = 0;
  for (size_t i = coeffs_.size(); i-- > 0;) v = v * t + coeffs_[i];
  return v;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rat> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<Rat> c(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial();
  std::vector<Rat> c(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rat& s) const {
  std::vector<Rat> c(coeffs_);
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::deflate(const Rat& root) const {
  if (is_zero()) throw std::domain_error("deflate: zero polynomial");
  if (eval(root) != 0) throw std::domain_error("deflate: not a root");
  // Synthetic division by (t - root), highest coefficient first.
  std::vector<Rat> q(coeffs_.size() - 1);
  Rat carry = 0;
  for (size_t i = coeffs_.size(); i-- > 1;) {
    carry = coeffs_[i] + carry * root;
    q[i - 1] = carry;
  }
  return Polynomial(std::move(q));
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const Rat& c = coeffs_[i];
    if (c == 0) continue;
    Rat a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool unit = (a == 1 && i > 0);
    if (!unit) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace kirchhoff
