#pragma once

#include <utility>
#include <vector>

#include "kirchhoff/polynomial.hpp"
#include "kirchhoff/rational.hpp"

namespace kirchhoff {

// Multiset of exact eigenvalues with multiplicities.  Construction merges
// duplicate values, drops zero-multiplicity entries, rejects negative
// multiplicities, and sorts by value descending.
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(std::vector<std::pair<Rat, int>> pairs);

  const std::vector<std::pair<Rat, int>>& pairs() const { return pairs_; }
  int dimension() const;           // sum of multiplicities
  Polynomial char_poly() const;    // prod (t - lambda)^mult, monic
  Rat product() const;             // prod lambda^mult (the determinant)
  Rat sum() const;                 // sum mult*lambda (the trace)
  bool operator==(const Spectrum& o) const = default;

 private:
  std::vector<std::pair<Rat, int>> pairs_;
};

}  // namespace kirchhoff
