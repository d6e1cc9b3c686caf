#pragma once

#include <complex>
#include <random>
#include <variant>
#include <vector>

#include "kirchhoff/exact_matrix.hpp"
#include "kirchhoff/linalg.hpp"
#include "kirchhoff/polynomial.hpp"
#include "kirchhoff/spectrum.hpp"

namespace kirchhoff {

using Cplx = std::complex<double>;

// (1, w^k, w^(2k), ..., w^((n-1)k)) with w = exp(2*pi*i/n).
std::vector<Cplx> root_vector(int n, int k);

// Eigenvalue of the n x n circulant with the given first row on the k-th
// root vector: sum_j row[j] * w^(jk).  Requires 0 <= k < n.
Cplx cyclic_eigenvalue(const std::vector<Rat>& first_row, int n, int k);

// --- Block-circulant matrices -----------------------------------------------
//
// An (l*n) x (l*n) matrix assembled from an l x l grid of n x n circulant
// blocks, each stored by its first row.  Every such matrix is simultaneously
// block-diagonalized by the root vectors: for each k the l x l reduced matrix
// has (i,j) entry equal to block (i,j)'s eigenvalue on z_{n,k}, and the
// characteristic polynomial of the full matrix is the product over k of the
// reduced characteristic polynomials.
struct CyclicBlockSpec {
  int grid = 0;   // l
  int block = 0;  // n
  std::vector<std::vector<std::vector<Rat>>> first_rows;  // [l][l][n]

  ExactMatrix assemble() const;
};

CyclicBlockSpec make_cyclic_spec(int grid, int block);  // zero-filled
std::vector<std::vector<Cplx>> reduce_cyclic_blocks(const CyclicBlockSpec& spec, int k);

// --- Mixed-size block matrices ----------------------------------------------
//
// Grid of l row/column classes where classes 0..l-2 have size 2n and class
// l-1 has size n.  Interior blocks are 2n x 2n circulants; the mixed blocks
// carry a doubling structure: the tall (2n x n) block is a circulant X
// stacked on itself, the wide (n x 2n) block is a circulant Y beside itself,
// and the corner is an n x n circulant.  The root vectors of order 2n still
// block-diagonalize such a matrix, with the parity rule: on odd k the last
// reduced column vanishes, and chi_full(t) * t^n = prod_{k=0}^{2n-1} chi_reduced_k(t).
struct MixedBlockSpec {
  int grid = 0;  // l >= 2
  int half = 0;  // n
  std::vector<std::vector<std::vector<Rat>>> full_rows;  // [l-1][l-1][2n]
  std::vector<std::vector<Rat>> stacked_rows;            // X_i first rows, [l-1][n]
  std::vector<std::vector<Rat>> wide_rows;               // Y_j first rows, [l-1][n]
  std::vector<Rat> corner_row;                           // [n]

  ExactMatrix assemble() const;  // size (2l-1)*n
};

MixedBlockSpec make_mixed_spec(int grid, int half);  // zero-filled
// Reduced l x l matrix for 0 <= k < 2*half.
std::vector<std::vector<Cplx>> reduce_mixed_blocks(const MixedBlockSpec& spec, int k);

// --- Diagonal-shift block structure ------------------------------------------
//
// M = T(A, d) + D(lambda, d): block (i,i) is lambda_i * Id of size d_i, block
// (i,j) is a_{ij} * (all-ones d_i x d_j).  Exactly:
//   chi_M(t) = chi_Mbar(t) * prod_i (t - lambda_i)^(d_i - 1)
// where Mbar = diag(d) * A + diag(lambda) is l x l.
struct StructuredMSpec {
  ExactMatrix a;            // l x l
  std::vector<Rat> lambda;  // l diagonal shifts
  std::vector<int> d;       // l positive block sizes
};

ExactMatrix structured_m_assemble(const StructuredMSpec& spec);
ExactMatrix structured_m_reduced(const StructuredMSpec& spec);  // diag(d)*A + diag(lambda)

struct StructuredSpectrum {
  Spectrum spectrum;     // rational eigenvalues found, with multiplicities
  Polynomial residual;   // unfactored part of chi_Mbar (constant 1 if fully split)
  bool fully_split = false;
};

// Spectrum of the full M: rational roots of chi_Mbar (extracted exactly via
// the rational root theorem with deflation) plus lambda_i with multiplicity
// d_i - 1.  If chi_Mbar has irrational roots they stay in `residual`.
StructuredSpectrum structured_m_spectrum(const StructuredMSpec& spec);

// Exact identity check: chi of the assembled M equals chi_Mbar * prod (t-lambda_i)^(d_i-1).
bool check_structured_identity(const StructuredMSpec& spec);

// --- Numeric cross-check helpers ---------------------------------------------

// Monic characteristic polynomial of a small complex matrix, coefficients
// lowest degree first (Faddeev-LeVerrier).
std::vector<Cplx> complex_char_poly(const std::vector<std::vector<Cplx>>& m);

// Singular values (descending) via Jacobi iteration on m^H * m.
std::vector<double> singular_values(const std::vector<std::vector<Cplx>>& m);

// Numeric rank: singular values above rel_tol * Frobenius norm.
int numeric_rank(const std::vector<std::vector<Cplx>>& m, double rel_tol = 1e-8);

struct ReductionCheck {
  bool ok = false;
  double max_rel_err = 0.0;  // worst per-coefficient relative error seen
};

// Verifies the factorization of the characteristic polynomial through the
// reduced matrices, coefficient by coefficient: pass iff
// |numeric - exact| <= max(rel_tol * |exact|, abs_tol) for every coefficient.
ReductionCheck check_cyclic_reduction(const CyclicBlockSpec& spec,
                                      double rel_tol = 1e-8, double abs_tol = 1e-10);
ReductionCheck check_mixed_reduction(const MixedBlockSpec& spec,
                                     double rel_tol = 1e-8, double abs_tol = 1e-10);

// Seeded random specs for property sweeps.  Integer entries in [-5, 5];
// grid in [1, max_grid] ([2, max_grid] for mixed), block size in [1, max_block]
// (mixed: half in [1, max_block]); structured d_i in [1, max_d], lambda and A
// entries in [-5, 5].
CyclicBlockSpec random_cyclic_spec(std::mt19937_64& rng, int max_grid = 4, int max_block = 6);
MixedBlockSpec random_mixed_spec(std::mt19937_64& rng, int max_grid = 4, int max_block = 6);
StructuredMSpec random_structured_spec(std::mt19937_64& rng, int max_grid = 4, int max_d = 4);

// --- Rotation-orbit block form of the complete-graph Hessian -----------------
//
// Edges of the complete graph on n vertices grouped by the orbits of the
// rotation i -> i+1 (mod n), with representatives {0,i} for i = 1..floor(n/2).
// For odd n all orbits have size n and the Hessian at all-ones is
// scale * (cyclic block matrix); for even n the diameter orbit {0, n/2} has
// size n/2 and the mixed-size structure applies.  scale = n^(n-4) exactly
// (rational: 1/3 for n = 3).
struct CompleteOrbitBlocks {
  std::variant<CyclicBlockSpec, MixedBlockSpec> spec;
  Rat scale;
  ExactMatrix assemble_scaled() const;  // scale * assembled spec
};

CompleteOrbitBlocks orbit_blocks_complete(int n);  // n >= 3

// Rank of (reduced block matrix at k) + 2*Id for k = 1..n-1 (numeric,
// singular-value based).  For even n and odd k the parity rule zeroes the
// diameter row/column of the reduction, whose diagonal entry then hits +2;
// the rank statement applies to the principal submatrix without that index,
// so that is what is measured there.
struct RankCheck {
  int k = 0;
  int rank = 0;
  bool ok = false;  // rank <= 1
};
std::vector<RankCheck> complete_orbit_rank_checks(int n, double rel_tol = 1e-8);

// --- Closed forms -------------------------------------------------------------

struct CompleteClosedForm {
  Spectrum spectrum;  // of the complete-graph Hessian at all-ones
  Rat det;
};
CompleteClosedForm closed_form_complete(int n);  // n >= 3

struct BipartiteClosedForm {
  Spectrum spectrum;   // of the complete-bipartite Hessian at all-ones
  Rat product_det;     // product over the spectrum
  Rat printed_det;     // the printed closed-form determinant
  bool agrees;         // printed_det == product_det
};
BipartiteClosedForm closed_form_bipartite(int m, int n);  // m, n >= 1, m + n >= 3

}  // namespace kirchhoff
