#pragma once

#include <string>
#include <utility>
#include <vector>

#include "kirchhoff/rational.hpp"

namespace kirchhoff {

// Univariate polynomial over Q, coefficients stored lowest degree first.
// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);

  // prod_i (t - root_i)^mult_i, monic.
  static Polynomial from_roots(const std::vector<std::pair<Rat, int>>& roots);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  // Coefficient of t^i; zero beyond the degree.
  const Rat& coeff(int i) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  Rat eval(const Rat& t) const;
  Polynomial derivative() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rat& s) const;
  bool operator==(const Polynomial& o) const = default;

  // Quotient of exact division by (t - root); throws if root is not a root.
  Polynomial deflate(const Rat& root) const;

  std::string to_string() const;  // e.g. "t^3 - 3*t - 2"

 private:
  std::vector<Rat> coeffs_;
  void trim();
};

}  // namespace kirchhoff
