#pragma once

#include "kirchhoff/exact_matrix.hpp"
#include "kirchhoff/polynomial.hpp"
#include "kirchhoff/spectrum.hpp"

namespace kirchhoff {

// Fraction-free Bareiss elimination after clearing each row's denominators.
Rat determinant(const ExactMatrix& m);

// Rank over Q by Gaussian elimination.
int rank(const ExactMatrix& m);

// Characteristic polynomial det(t*Id - m), monic, exact.  Computed from
// integer power traces via Newton's identities on a scaled-integral copy:
// chi_A(t) = s^(-n) * chi_(sA)(s*t).
Polynomial char_poly(const ExactMatrix& m);

// Signed minor (-1)^(i+j) * det(m with row i, col j removed).
Rat cofactor(const ExactMatrix& m, int i, int j);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Inertia&) const = default;
};

struct SpectrumCheck {
  bool char_poly_match = false;   // char_poly(m) == claimed.char_poly()
  bool diagonalizable = false;    // every claimed eigenspace has full dimension
  Inertia inertia;                // counted from the claimed values by sign
  bool verified() const { return char_poly_match && diagonalizable; }
};

// Checks a claimed exact spectrum against m.  Throws if the claimed
// dimension differs from m's size.  Inertia is meaningful only when the
// check verifies (it is tallied from the claimed values).
SpectrumCheck verify_spectrum(const ExactMatrix& m, const Spectrum& claimed);

}  // namespace kirchhoff
