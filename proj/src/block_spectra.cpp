#include "kirchhoff/block_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kirchhoff {

namespace {

constexpr double kPi = std::numbers::pi;

// w^(j mod n) for w = exp(2*pi*i/n), computed from a reduced angle.
Cplx unit_root_pow(int n, long j) {
  long r = j % n;
  if (r < 0) r += n;
  return std::polar(1.0, 2.0 * kPi * static_cast<double>(r) / static_cast<double>(n));
}

int mod(int a, int n) {
  int r = a % n;
  return r < 0 ? r + n : r;
}

long draw(std::mt19937_64& rng, long lo, long hi) {
  // Inclusive range; modulo bias is irrelevant at these sizes and keeps the
  // draw sequence identical across standard libraries.
  return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
}

void check_first_row(const std::vector<Rat>& row, int len, const char* what) {
  if (static_cast<int>(row.size()) != len)
    throw std::invalid_argument(std::string(what) + ": first row has wrong length");
}

}  // namespace

std::vector<Cplx> root_vector(int n, int k) {
  if (n <= 0 || k < 0 || k >= n) throw std::invalid_argument("root_vector: bad n or k");
  std::vector<Cplx> z(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) z[static_cast<size_t>(j)] = unit_root_pow(n, static_cast<long>(j) * k);
  return z;
}

Cplx cyclic_eigenvalue(const std::vector<Rat>& first_row, int n, int k) {
  if (static_cast<int>(first_row.size()) != n)
    throw std::invalid_argument("cyclic_eigenvalue: row length != n");
  if (k < 0 || k >= n) throw std::invalid_argument("cyclic_eigenvalue: k out of range");
  Cplx sum = 0;
  for (int c = 0; c < n; ++c)
    sum += to_double(first_row[static_cast<size_t>(c)]) * unit_root_pow(n, static_cast<long>(c) * k);
  return sum;
}

// --- Cyclic block matrices ---------------------------------------------------

CyclicBlockSpec make_cyclic_spec(int grid, int block) {
  if (grid < 1 || block < 1) throw std::invalid_argument("make_cyclic_spec: bad sizes");
  CyclicBlockSpec s;
  s.grid = grid;
  s.block = block;
  s.first_rows.assign(grid, std::vector<std::vector<Rat>>(
                                grid, std::vector<Rat>(static_cast<size_t>(block), Rat(0))));
  return s;
}

ExactMatrix CyclicBlockSpec::assemble() const {
  const int l = grid, n = block;
  if (static_cast<int>(first_rows.size()) != l)
    throw std::invalid_argument("CyclicBlockSpec: grid mismatch");
  ExactMatrix m(l * n, l * n);
  for (int i = 0; i < l; ++i) {
    if (static_cast<int>(first_rows[i].size()) != l)
      throw std::invalid_argument("CyclicBlockSpec: grid mismatch");
    for (int j = 0; j < l; ++j) {
      const auto& row = first_rows[i][j];
      check_first_row(row, n, "CyclicBlockSpec");
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
          m.at(i * n + r, j * n + c) = row[static_cast<size_t>(mod(c - r, n))];
    }
  }
  return m;
}

std::vector<std::vector<Cplx>> reduce_cyclic_blocks(const CyclicBlockSpec& spec, int k) {
  const int l = spec.grid, n = spec.block;
  if (k < 0 || k >= n) throw std::invalid_argument("reduce_cyclic_blocks: k out of range");
  std::vector<std::vector<Cplx>> m(static_cast<size_t>(l), std::vector<Cplx>(static_cast<size_t>(l)));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] = cyclic_eigenvalue(spec.first_rows[i][j], n, k);
  return m;
}

// --- Mixed-size block matrices -----------------------------------------------

MixedBlockSpec make_mixed_spec(int grid, int half) {
  if (grid < 2 || half < 1) throw std::invalid_argument("make_mixed_spec: bad sizes");
  MixedBlockSpec s;
  s.grid = grid;
  s.half = half;
  s.full_rows.assign(grid - 1, std::vector<std::vector<Rat>>(
                                   grid - 1, std::vector<Rat>(static_cast<size_t>(2 * half), Rat(0))));
  s.stacked_rows.assign(grid - 1, std::vector<Rat>(static_cast<size_t>(half), Rat(0)));
  s.wide_rows.assign(grid - 1, std::vector<Rat>(static_cast<size_t>(half), Rat(0)));
  s.corner_row.assign(static_cast<size_t>(half), Rat(0));
  return s;
}

ExactMatrix MixedBlockSpec::assemble() const {
  const int l = grid, n = half;
  if (l < 2) throw std::invalid_argument("MixedBlockSpec: grid must be >= 2");
  if (static_cast<int>(full_rows.size()) != l - 1 ||
      static_cast<int>(stacked_rows.size()) != l - 1 ||
      static_cast<int>(wide_rows.size()) != l - 1)
    throw std::invalid_argument("MixedBlockSpec: grid mismatch");
  check_first_row(corner_row, n, "MixedBlockSpec corner");
  const int full = 2 * n;
  const int size = (l - 1) * full + n;
  ExactMatrix m(size, size);
  for (int i = 0; i < l - 1; ++i) {
    if (static_cast<int>(full_rows[i].size()) != l - 1)
      throw std::invalid_argument("MixedBlockSpec: grid mismatch");
    check_first_row(stacked_rows[i], n, "MixedBlockSpec stacked");
    check_first_row(wide_rows[i], n, "MixedBlockSpec wide");
    for (int j = 0; j < l - 1; ++j) {
      const auto& row = full_rows[i][j];
      check_first_row(row, full, "MixedBlockSpec full");
      for (int r = 0; r < full; ++r)
        for (int c = 0; c < full; ++c)
          m.at(i * full + r, j * full + c) = row[static_cast<size_t>(mod(c - r, full))];
    }
    // Tall block: an n x n circulant stacked on itself.
    for (int r = 0; r < full; ++r)
      for (int c = 0; c < n; ++c)
        m.at(i * full + r, (l - 1) * full + c) =
            stacked_rows[i][static_cast<size_t>(mod(c - (r % n), n))];
    // Wide block: an n x n circulant beside itself.
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < full; ++c)
        m.at((l - 1) * full + r, i * full + c) =
            wide_rows[i][static_cast<size_t>(mod((c % n) - r, n))];
  }
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      m.at((l - 1) * full + r, (l - 1) * full + c) = corner_row[static_cast<size_t>(mod(c - r, n))];
  return m;
}

std::vector<std::vector<Cplx>> reduce_mixed_blocks(const MixedBlockSpec& spec, int k) {
  const int l = spec.grid, n = spec.half;
  const int full = 2 * n;
  if (k < 0 || k >= full) throw std::invalid_argument("reduce_mixed_blocks: k out of range");
  const bool odd = (k % 2 != 0);
  std::vector<std::vector<Cplx>> m(static_cast<size_t>(l), std::vector<Cplx>(static_cast<size_t>(l)));
  for (int i = 0; i < l - 1; ++i) {
    for (int j = 0; j < l - 1; ++j)
      m[static_cast<size_t>(i)][static_cast<size_t>(j)] =
          cyclic_eigenvalue(spec.full_rows[i][j], full, k);
    // Wide row class: the assembled first row is the circulant row repeated,
    // so its eigenvalue carries the factor (1 + (-1)^k) automatically.
    Cplx wide = 0;
    for (int c = 0; c < n; ++c)
      wide += to_double(spec.wide_rows[i][static_cast<size_t>(c)]) *
              (unit_root_pow(full, static_cast<long>(c) * k) +
               unit_root_pow(full, static_cast<long>(c + n) * k));
    m[static_cast<size_t>(l - 1)][static_cast<size_t>(i)] = wide;
    // Half-size column class: zero on odd k (the stacked structure is
    // incompatible with the sign flip of the root vector's second half).
    Cplx tall = 0;
    if (!odd)
      for (int c = 0; c < n; ++c)
        tall += to_double(spec.stacked_rows[i][static_cast<size_t>(c)]) *
                unit_root_pow(full, static_cast<long>(c) * k);
    m[static_cast<size_t>(i)][static_cast<size_t>(l - 1)] = tall;
  }
  Cplx corner = 0;
  if (!odd)
    for (int c = 0; c < n; ++c)
      corner += to_double(spec.corner_row[static_cast<size_t>(c)]) *
                unit_root_pow(full, static_cast<long>(c) * k);
  m[static_cast<size_t>(l - 1)][static_cast<size_t>(l - 1)] = corner;
  return m;
}

// --- Diagonal-shift block structure --------------------------------------------

ExactMatrix structured_m_assemble(const StructuredMSpec& spec) {
  const int l = static_cast<int>(spec.d.size());
  if (spec.a.rows() != l || spec.a.cols() != l || static_cast<int>(spec.lambda.size()) != l)
    throw std::invalid_argument("structured_m_assemble: shape mismatch");
  int size = 0;
  std::vector<int> offset(static_cast<size_t>(l));
  for (int i = 0; i < l; ++i) {
    if (spec.d[static_cast<size_t>(i)] < 1)
      throw std::invalid_argument("structured_m_assemble: block sizes must be positive");
    offset[static_cast<size_t>(i)] = size;
    size += spec.d[static_cast<size_t>(i)];
  }
  ExactMatrix m(size, size);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      for (int r = 0; r < spec.d[static_cast<size_t>(i)]; ++r)
        for (int c = 0; c < spec.d[static_cast<size_t>(j)]; ++c)
          m.at(offset[static_cast<size_t>(i)] + r, offset[static_cast<size_t>(j)] + c) = spec.a.at(i, j);
  for (int i = 0; i < l; ++i)
    for (int r = 0; r < spec.d[static_cast<size_t>(i)]; ++r) {
      int p = offset[static_cast<size_t>(i)] + r;
      m.at(p, p) += spec.lambda[static_cast<size_t>(i)];
    }
  return m;
}

ExactMatrix structured_m_reduced(const StructuredMSpec& spec) {
  const int l = static_cast<int>(spec.d.size());
  if (spec.a.rows() != l || spec.a.cols() != l || static_cast<int>(spec.lambda.size()) != l)
    throw std::invalid_argument("structured_m_reduced: shape mismatch");
  ExactMatrix m(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m.at(i, j) = Rat(spec.d[static_cast<size_t>(i)]) * spec.a.at(i, j);
  for (int i = 0; i < l; ++i) m.at(i, i) += spec.lambda[static_cast<size_t>(i)];
  return m;
}

namespace {

// All rational roots of p (with multiplicity), found by candidate testing and
// deflation.  Returns the found roots and leaves the unfactored part in p.
std::vector<std::pair<Rat, int>> strip_rational_roots(Polynomial& p) {
  std::vector<std::pair<Rat, int>> roots;
  // Zero roots first.
  int zeros = 0;
  while (!p.is_zero() && p.coeff(0) == 0 && p.degree() > 0) {
    p = p.deflate(Rat(0));
    ++zeros;
  }
  if (zeros > 0) roots.emplace_back(Rat(0), zeros);

  auto divisors = [](Int v) {
    std::vector<Int> ds;
    v = abs(v);
    for (Int i = 1; i * i <= v; ++i) {
      if (v % i == 0) {
        ds.push_back(i);
        if (i * i != v) ds.push_back(v / i);
      }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  };

  while (p.degree() >= 1) {
    // Clear denominators to get integer coefficients.
    Int den = 1;
    for (int i = 0; i <= p.degree(); ++i) den = lcm(den, Int(p.coeff(i).get_den()));
    Int c0 = Int(p.coeff(0).get_num()) * exact_div(den, Int(p.coeff(0).get_den()));
    Int cn = Int(p.coeff(p.degree()).get_num()) * exact_div(den, Int(p.coeff(p.degree()).get_den()));
    // Candidate enumeration is only practical for moderate constant terms.
    if (abs(c0) > Int("1000000000000")) break;
    bool found = false;
    for (const Int& num : divisors(c0)) {
      for (const Int& q : divisors(cn)) {
        for (int sgn : {1, -1}) {
          Rat cand(sgn * num, q);
          cand.canonicalize();
          if (p.eval(cand) == 0) {
            int mult = 0;
            while (p.degree() >= 1 && p.eval(cand) == 0) {
              p = p.deflate(cand);
              ++mult;
            }
            roots.emplace_back(cand, mult);
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  return roots;
}

}  // namespace

StructuredSpectrum structured_m_spectrum(const StructuredMSpec& spec) {
  StructuredSpectrum out;
  Polynomial chi = char_poly(structured_m_reduced(spec));
  std::vector<std::pair<Rat, int>> values = strip_rational_roots(chi);
  for (size_t i = 0; i < spec.d.size(); ++i)
    values.emplace_back(spec.lambda[i], spec.d[i] - 1);
  out.spectrum = Spectrum(std::move(values));
  out.fully_split = (chi.degree() == 0);
  out.residual = std::move(chi);
  return out;
}

bool check_structured_identity(const StructuredMSpec& spec) {
  std::vector<std::pair<Rat, int>> shifts;
  for (size_t i = 0; i < spec.d.size(); ++i) shifts.emplace_back(spec.lambda[i], spec.d[i] - 1);
  Polynomial lhs = char_poly(structured_m_assemble(spec));
  Polynomial rhs = char_poly(structured_m_reduced(spec)) * Polynomial::from_roots(shifts);
  return lhs == rhs;
}

// --- Numeric helpers -----------------------------------------------------------

std::vector<Cplx> complex_char_poly(const std::vector<std::vector<Cplx>>& m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("complex_char_poly: matrix not square");
  std::vector<Cplx> coeffs(n + 1);
  coeffs[n] = 1.0;
  if (n == 0) return coeffs;
  // Faddeev-LeVerrier: M_k = A*(M_{k-1} + c_{n-k+1}*Id), c_{n-k} = -tr(M_k)/k.
  std::vector<std::vector<Cplx>> mk(n, std::vector<Cplx>(n, 0.0));
  for (size_t i = 0; i < n; ++i) mk[i][i] = 1.0;  // M_0 = Id
  for (size_t k = 1; k <= n; ++k) {
    std::vector<std::vector<Cplx>> next(n, std::vector<Cplx>(n, 0.0));
    for (size_t r = 0; r < n; ++r)
      for (size_t t = 0; t < n; ++t) {
        if (m[r][t] == Cplx(0.0)) continue;
        for (size_t c = 0; c < n; ++c) next[r][c] += m[r][t] * mk[t][c];
      }
    Cplx tr = 0;
    for (size_t i = 0; i < n; ++i) tr += next[i][i];
    Cplx ck = -tr / static_cast<double>(k);
    coeffs[n - k] = ck;
    for (size_t i = 0; i < n; ++i) next[i][i] += ck;
    mk.swap(next);
  }
  return coeffs;
}

std::vector<double> singular_values(const std::vector<std::vector<Cplx>>& m) {
  const size_t rows = m.size();
  const size_t cols = rows == 0 ? 0 : m[0].size();
  for (const auto& row : m)
    if (row.size() != cols) throw std::invalid_argument("singular_values: ragged matrix");
  if (cols == 0) return {};
  // One-sided Jacobi: unitarily mix column pairs until all columns are
  // mutually orthogonal; the singular values are the final column norms.
  // Never forms m^H * m, whose squared condition number would drown singular
  // values near eps*||m|| -- exactly the ones rank decisions hinge on.
  std::vector<std::vector<Cplx>> a(cols, std::vector<Cplx>(rows));  // column-major
  for (size_t r = 0; r < rows; ++r)
    for (size_t c = 0; c < cols; ++c) a[c][r] = m[r][c];
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (size_t p = 0; p < cols; ++p)
      for (size_t q = p + 1; q < cols; ++q) {
        double app = 0, aqq = 0;
        Cplx apq = 0;
        for (size_t r = 0; r < rows; ++r) {
          app += std::norm(a[p][r]);
          aqq += std::norm(a[q][r]);
          apq += std::conj(a[p][r]) * a[q][r];
        }
        double r = std::abs(apq);
        if (app == 0 || aqq == 0 || r <= 1e-15 * std::sqrt(app * aqq)) continue;
        rotated = true;
        Cplx phase = apq / r;
        double tau = (aqq - app) / (2 * r);
        double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1 + tau * tau))
                            : -1.0 / (-tau + std::sqrt(1 + tau * tau));
        double c = 1.0 / std::sqrt(1 + t * t);
        double s = t * c;
        for (size_t i = 0; i < rows; ++i) {
          Cplx xp = a[p][i], xq = a[q][i];
          a[p][i] = c * xp - s * std::conj(phase) * xq;
          a[q][i] = s * phase * xp + c * xq;
        }
      }
    if (!rotated) break;
  }
  std::vector<double> sv(cols);
  for (size_t c = 0; c < cols; ++c) {
    double norm2 = 0;
    for (size_t r = 0; r < rows; ++r) norm2 += std::norm(a[c][r]);
    sv[c] = std::sqrt(norm2);
  }
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

int numeric_rank(const std::vector<std::vector<Cplx>>& m, double rel_tol) {
  if (m.empty()) return 0;
  double frob = 0;
  for (const auto& row : m)
    for (const Cplx& x : row) frob += std::norm(x);
  frob = std::sqrt(frob);
  int rank = 0;
  for (double sv : singular_values(m))
    if (sv > rel_tol * frob) ++rank;
  return rank;
}

namespace {

std::vector<Cplx> multiply_complex_polys(const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
  std::vector<Cplx> c(a.size() + b.size() - 1, 0.0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ReductionCheck compare_poly(const Polynomial& exact, const std::vector<Cplx>& numeric,
                            double rel_tol, double abs_tol) {
  ReductionCheck out;
  size_t len = std::max(numeric.size(), static_cast<size_t>(exact.degree() + 1));
  out.ok = true;
  for (size_t i = 0; i < len; ++i) {
    double e = i <= static_cast<size_t>(exact.degree()) && exact.degree() >= 0
                   ? to_double(exact.coeff(static_cast<int>(i)))
                   : 0.0;
    Cplx v = i < numeric.size() ? numeric[i] : Cplx(0.0);
    double diff = std::abs(v - Cplx(e));
    if (diff > std::max(rel_tol * std::abs(e), abs_tol)) out.ok = false;
    double denom = std::max(std::abs(e), abs_tol / rel_tol);
    out.max_rel_err = std::max(out.max_rel_err, diff / denom);
  }
  return out;
}

}  // namespace

ReductionCheck check_cyclic_reduction(const CyclicBlockSpec& spec, double rel_tol, double abs_tol) {
  Polynomial exact = char_poly(spec.assemble());
  std::vector<Cplx> prod{Cplx(1.0)};
  for (int k = 0; k < spec.block; ++k)
    prod = multiply_complex_polys(prod, complex_char_poly(reduce_cyclic_blocks(spec, k)));
  return compare_poly(exact, prod, rel_tol, abs_tol);
}

ReductionCheck check_mixed_reduction(const MixedBlockSpec& spec, double rel_tol, double abs_tol) {
  // chi_full(t) * t^half == prod over k < 2*half of chi_reduced_k(t).
  std::vector<Rat> shift(static_cast<size_t>(spec.half) + 1, Rat(0));
  shift.back() = 1;
  Polynomial exact = char_poly(spec.assemble()) * Polynomial(std::move(shift));
  std::vector<Cplx> prod{Cplx(1.0)};
  for (int k = 0; k < 2 * spec.half; ++k) {
    std::vector<std::vector<Cplx>> red = reduce_mixed_blocks(spec, k);
    std::vector<Cplx> factor;
    if (k % 2 != 0) {
      // On odd k the half-size class column is exactly zero, so the char
      // polynomial is exactly t times the full-class part, whatever the
      // (noise-level) wide row holds.  Computing it in that form keeps the
      // product's low-order coefficients exactly zero, matching the exact
      // side's t^half factor instead of comparing cancellation residue to 0.
      red.pop_back();
      for (auto& row : red) row.pop_back();
      factor = complex_char_poly(red);
      factor.insert(factor.begin(), Cplx(0.0));
    } else {
      factor = complex_char_poly(red);
    }
    prod = multiply_complex_polys(prod, factor);
  }
  return compare_poly(exact, prod, rel_tol, abs_tol);
}

// --- Random specs ----------------------------------------------------------------

CyclicBlockSpec random_cyclic_spec(std::mt19937_64& rng, int max_grid, int max_block) {
  int grid = static_cast<int>(draw(rng, 1, max_grid));
  int block = static_cast<int>(draw(rng, 1, max_block));
  CyclicBlockSpec s = make_cyclic_spec(grid, block);
  for (auto& row_of_blocks : s.first_rows)
    for (auto& row : row_of_blocks)
      for (auto& x : row) x = Rat(draw(rng, -5, 5));
  return s;
}

MixedBlockSpec random_mixed_spec(std::mt19937_64& rng, int max_grid, int max_block) {
  int grid = static_cast<int>(draw(rng, 2, std::max(2, max_grid)));
  int half = static_cast<int>(draw(rng, 1, max_block));
  MixedBlockSpec s = make_mixed_spec(grid, half);
  for (auto& row_of_blocks : s.full_rows)
    for (auto& row : row_of_blocks)
      for (auto& x : row) x = Rat(draw(rng, -5, 5));
  for (auto& row : s.stacked_rows)
    for (auto& x : row) x = Rat(draw(rng, -5, 5));
  for (auto& row : s.wide_rows)
    for (auto& x : row) x = Rat(draw(rng, -5, 5));
  for (auto& x : s.corner_row) x = Rat(draw(rng, -5, 5));
  return s;
}

StructuredMSpec random_structured_spec(std::mt19937_64& rng, int max_grid, int max_d) {
  int l = static_cast<int>(draw(rng, 1, max_grid));
  StructuredMSpec s;
  s.a = ExactMatrix(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) s.a.at(i, j) = Rat(draw(rng, -5, 5));
  s.lambda.resize(static_cast<size_t>(l));
  for (auto& x : s.lambda) x = Rat(draw(rng, -5, 5));
  s.d.resize(static_cast<size_t>(l));
  for (auto& x : s.d) x = static_cast<int>(draw(rng, 1, max_d));
  return s;
}

// --- Rotation-orbit blocks of the complete-graph Hessian -------------------------

namespace {

// Off-diagonal Hessian entry of the complete graph, divided by n^(n-4):
// 3 if the edges share a vertex, 4 if disjoint, 0 for the same edge.
int edge_pair_weight(int n, int a0, int a1, int b0, int b1) {
  int shared = (a0 == b0) + (a0 == b1) + (a1 == b0) + (a1 == b1);
  (void)n;
  if (shared == 2) return 0;
  return shared == 1 ? 3 : 4;
}

// a({0,i} rotated by 0, {0,j} rotated by c) in the n-cycle rotation.
int orbit_entry(int n, int i, int j, int c) {
  int b0 = c % n;
  int b1 = (j + c) % n;
  return edge_pair_weight(n, 0, i % n, b0, b1);
}

}  // namespace

ExactMatrix CompleteOrbitBlocks::assemble_scaled() const {
  ExactMatrix m = std::visit([](const auto& s) { return s.assemble(); }, spec);
  return m * scale;
}

CompleteOrbitBlocks orbit_blocks_complete(int n) {
  if (n < 3) throw std::invalid_argument("orbit_blocks_complete: need n >= 3");
  CompleteOrbitBlocks out;
  out.scale = rat_pow(Rat(n), static_cast<long>(n) - 4);
  const int l = n / 2;
  if (n % 2 != 0) {
    // All orbits of {0,i}, i = 1..l, have full size n.
    CyclicBlockSpec spec = make_cyclic_spec(l, n);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        for (int c = 0; c < n; ++c)
          spec.first_rows[i][j][static_cast<size_t>(c)] = orbit_entry(n, i + 1, j + 1, c);
    out.spec = std::move(spec);
  } else {
    // Orbits of {0,i} for i < l have size n; the diameter orbit {0,l} has
    // size l and produces the mixed half-size class.
    MixedBlockSpec spec = make_mixed_spec(l, l);
    for (int i = 0; i + 1 < l; ++i) {
      for (int j = 0; j + 1 < l; ++j)
        for (int c = 0; c < n; ++c)
          spec.full_rows[i][j][static_cast<size_t>(c)] = orbit_entry(n, i + 1, j + 1, c);
      for (int c = 0; c < l; ++c) {
        spec.stacked_rows[i][static_cast<size_t>(c)] = orbit_entry(n, i + 1, l, c);
        spec.wide_rows[i][static_cast<size_t>(c)] = orbit_entry(n, l, i + 1, c);
      }
    }
    for (int c = 0; c < l; ++c)
      spec.corner_row[static_cast<size_t>(c)] = orbit_entry(n, l, l, c);
    out.spec = std::move(spec);
  }
  return out;
}

std::vector<RankCheck> complete_orbit_rank_checks(int n, double rel_tol) {
  CompleteOrbitBlocks blocks = orbit_blocks_complete(n);
  std::vector<RankCheck> checks;
  for (int k = 1; k < n; ++k) {
    std::vector<std::vector<Cplx>> red;
    bool drop_last = false;
    if (std::holds_alternative<CyclicBlockSpec>(blocks.spec)) {
      red = reduce_cyclic_blocks(std::get<CyclicBlockSpec>(blocks.spec), k);
    } else {
      red = reduce_mixed_blocks(std::get<MixedBlockSpec>(blocks.spec), k);
      // On odd k the half-size class decouples (its reduced row/column is
      // zeroed and the +2 shift puts a lone 2 on that diagonal), so the
      // rank-one statement applies to the other classes.
      drop_last = (k % 2 != 0);
    }
    for (size_t i = 0; i < red.size(); ++i) red[i][i] += 2.0;
    if (drop_last) {
      red.pop_back();
      for (auto& row : red) row.pop_back();
    }
    RankCheck rc;
    rc.k = k;
    rc.rank = red.empty() ? 0 : numeric_rank(red, rel_tol);
    rc.ok = rc.rank <= 1;
    checks.push_back(rc);
  }
  return checks;
}

// --- Closed forms -----------------------------------------------------------------

CompleteClosedForm closed_form_complete(int n) {
  if (n < 3) throw std::invalid_argument("closed_form_complete: need n >= 3");
  const long edge_count = static_cast<long>(n) * (n - 1) / 2;
  Rat n3 = rat_pow(Rat(n), static_cast<long>(n) - 3);
  Rat n4 = rat_pow(Rat(n), static_cast<long>(n) - 4);
  CompleteClosedForm out;
  out.spectrum = Spectrum({
      {Rat(2 * (n - 2)) * n3, 1},
      {-n3, n - 1},
      {Rat(-2) * n4, static_cast<int>(edge_count) - n},
  });
  Rat sign = (edge_count - 1) % 2 == 0 ? 1 : -1;
  out.det = sign * rat_pow(Rat(2), edge_count - n + 1) *
            rat_pow(Rat(n), n + edge_count * (n - 4)) * Rat(n - 2);
  return out;
}

BipartiteClosedForm closed_form_bipartite(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("closed_form_bipartite: need m, n >= 1");
  Rat mn2 = rat_pow(Rat(m), static_cast<long>(n) - 2);  // m^(n-2)
  Rat nm2 = rat_pow(Rat(n), static_cast<long>(m) - 2);  // n^(m-2)
  BipartiteClosedForm out;
  out.spectrum = Spectrum({
      {mn2 * nm2 * Rat((m + n - 1) * (m + n - 2)), 1},
      {-(mn2 * Rat(m)) * nm2, m - 1},        // -m^(n-1) n^(m-2)
      {-mn2 * (nm2 * Rat(n)), n - 1},        // -m^(n-2) n^(m-1)
      {Rat(-2) * mn2 * nm2, (m - 1) * (n - 1)},
  });
  out.product_det = out.spectrum.product();
  const long mn = static_cast<long>(m) * n;
  Rat sign = (mn - 1) % 2 == 0 ? 1 : -1;
  out.printed_det = sign * rat_pow(Rat(2), static_cast<long>(m - 1) * (n - 1)) *
                    rat_pow(Rat(m), (mn - m - 1) * (n - 1)) *
                    rat_pow(Rat(n), (mn - n - 1) * (m - 1)) *
                    Rat((m + n - 1) * (m + n - 2));
  out.agrees = (out.printed_det == out.product_det);
  return out;
}

}  // namespace kirchhoff
