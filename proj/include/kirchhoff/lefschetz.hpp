#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kirchhoff/exact_matrix.hpp"
#include "kirchhoff/multigraph.hpp"
#include "kirchhoff/multilinear.hpp"
#include "kirchhoff/rational.hpp"

namespace kirchhoff {

// Catalecticant of a degree-s multilinear form F in N variables at degree k:
// rows indexed by squarefree monomials of degree k, columns by degree s-k,
// both in lexicographic order on their index tuples; entry (u, v) is the
// coefficient of F picked out by differentiating with u*v (so for multilinear
// F: 1 if u and v are disjoint and their union is a term of F, else 0).
ExactMatrix catalecticant(const MultilinearPoly& f, int k);

enum class BasisOrder { LexForward, LexReverse };

// Graded pieces of the apolarity algebra Q[x]/Ann(F): for each degree k the
// rank h_k of the catalecticant and a monomial basis chosen greedily (first
// h_k rows, in lex order on index tuples, whose catalecticant rows are
// linearly independent; LexReverse scans the same rows back to front).
struct GradedAlgebraModel {
  MultilinearPoly f;
  int socle_degree = 0;                         // s = deg F
  std::vector<int> hilbert;                     // h_0..h_s
  std::vector<std::vector<std::uint64_t>> bases;  // basis monomial masks per degree
};

GradedAlgebraModel hilbert_and_bases(const MultilinearPoly& f,
                                     BasisOrder order = BasisOrder::LexForward);

// Higher Hessian at degree k: square matrix over the chosen degree-k basis,
// entry (u, v) = (the monomial u*v applied to F as a differential operator)
// evaluated at the point.  For multilinear F the operator kills F unless
// u and v are disjoint.
ExactMatrix kth_hessian_at(const GradedAlgebraModel& model, int k,
                           const std::vector<Rat>& point);

struct SLPEntry {
  int k = 0;
  int dim = 0;       // h_k
  Rat det;           // det of the k-th Hessian at the evaluation point
  bool nonzero = false;
};

struct SLPReport {
  std::string graph;            // descriptor echo
  int socle_degree = 0;
  std::vector<int> hilbert;
  std::vector<Rat> l_coeffs;    // evaluation point (the candidate Lefschetz element)
  std::vector<SLPEntry> per_k;  // k = 0..floor(s/2)
  bool verdict = false;         // all dets nonzero
};

// Strong-Lefschetz check for the spanning-tree polynomial of g via the
// Hessian criterion: the linear form with coefficients `point` is a strong
// Lefschetz element iff det of every k-th Hessian at `point` is nonzero for
// k = 0..floor(s/2), s = vertex_count - 1.  Empty `point` means all-ones.
SLPReport slp_check(const MultiGraph& g, std::vector<Rat> point = {},
                    const std::string& descriptor = "",
                    int edge_cap = kDefaultEdgeCap,
                    BasisOrder order = BasisOrder::LexForward);

}  // namespace kirchhoff
