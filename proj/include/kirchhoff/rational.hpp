#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace kirchhoff {

// All headline quantities (tree counts, determinants, spectra, Hilbert data)
// are computed in exact arithmetic.  Int/Rat are the only numeric types the
// core algorithms use; floating point is confined to the numeric cross-checks
// in block_spectra.hpp.
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// base^exp for possibly negative exp; exp < 0 requires base != 0.
inline Rat rat_pow(const Rat& base, long exp) {
  if (exp < 0 && base == 0) throw std::domain_error("rat_pow: 0 to a negative power");
  Rat num = base;
  unsigned long e = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Rat r;
  mpz_pow_ui(r.get_num_mpz_t(), num.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), num.get_den_mpz_t(), e);
  r.canonicalize();
  if (exp < 0) r = 1 / r;
  return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rat& r) {
  return r.get_str();
}

inline std::string to_string(const Int& z) {
  return z.get_str();
}

// Exact quotient; throws if b does not divide a.
inline Int exact_div(const Int& a, const Int& b) {
  if (b == 0) throw std::domain_error("exact_div: division by zero");
  Int q, rem;
  mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (rem != 0) throw std::domain_error("exact_div: inexact division");
  return q;
}

// Rat -> double, for the numeric cross-checks only.
inline double to_double(const Rat& r) { return r.get_d(); }

}  // namespace kirchhoff
