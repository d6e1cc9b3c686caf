#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kirchhoff/exact_matrix.hpp"
#include "kirchhoff/multigraph.hpp"
#include "kirchhoff/rational.hpp"

namespace kirchhoff {

// Multilinear (squarefree) polynomial with integer coefficients in variables
// indexed by an ordered universe of edge ids.  A term is a bitmask over
// universe positions; the map keeps terms in increasing mask order.
class MultilinearPoly {
 public:
  explicit MultilinearPoly(std::vector<int> universe);

  const std::vector<int>& universe() const { return universe_; }
  int variable_count() const { return static_cast<int>(universe_.size()); }
  const std::map<std::uint64_t, Int>& terms() const { return terms_; }

  void add_term(std::uint64_t mask, const Int& coeff);  // accumulates; drops zeros
  bool is_zero() const { return terms_.empty(); }
  int degree() const;            // max term size; -1 for the zero polynomial
  bool is_homogeneous() const;   // all terms the same size (vacuously true if zero)

  Rat evaluate(const std::vector<Rat>& point) const;

  // One term per line, "coeff: e_i1 e_i2 ...", sorted by term mask.
  std::string serialize() const;

  // Position of an edge id in the universe; throws if absent.
  int position_of(int edge_id) const;

  bool operator==(const MultilinearPoly&) const = default;

 private:
  std::vector<int> universe_;
  std::map<std::uint64_t, Int> terms_;
};

// A monomial differential operator: exponent per universe position.
struct DiffOperator {
  std::vector<int> exponents;
};

// Generating polynomial of the spanning trees: one degree-(V-1) squarefree
// term per tree, all coefficients 1, universe = edge ids ascending.
MultilinearPoly kirchhoff_polynomial(const MultiGraph& g, int edge_cap = kDefaultEdgeCap);

// Applies the operator as iterated partial derivatives.  Any exponent >= 2
// kills every squarefree term, so the result is the zero polynomial.
MultilinearPoly apply_operator(const MultilinearPoly& p, const DiffOperator& op);

// Second-derivative matrix (d_i d_j p) evaluated at a point, indexed by
// universe position.  Symmetric with identically zero diagonal (p is
// squarefree).
ExactMatrix hessian_at(const MultilinearPoly& p, const std::vector<Rat>& point);

// The same matrix at the all-ones point, computed without expanding the
// polynomial: entry (i,j) is the number of spanning trees containing edges
// i and j (0 for parallel pairs and on the diagonal).  Works for any edge
// count since nothing is enumerated.
ExactMatrix graph_hessian_at_ones(const MultiGraph& g);

}  // namespace kirchhoff
