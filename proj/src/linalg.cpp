#include "kirchhoff/linalg.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace kirchhoff {

namespace {

// Clears denominators row by row: returns the integer matrix and the product
// of the per-row scale factors (det(int matrix) = scale * det(input)).
std::pair<std::vector<std::vector<Int>>, Int> to_row_scaled_integers(const ExactMatrix& m) {
  const int n = m.rows();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(m.cols()));
  Int scale = 1;
  for (int r = 0; r < n; ++r) {
    Int l = 1;
    for (int c = 0; c < m.cols(); ++c) l = lcm(l, Int(m.at(r, c).get_den()));
    for (int c = 0; c < m.cols(); ++c) {
      const Rat& x = m.at(r, c);
      a[r][c] = Int(x.get_num()) * exact_div(l, Int(x.get_den()));
    }
    scale *= l;
  }
  return {std::move(a), std::move(scale)};
}

Int integer_bareiss_det(std::vector<std::vector<Int>>& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return 1;
  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int r = k; r < n; ++r)
      if (a[r][k] != 0) { pivot = r; break; }
    if (pivot < 0) return 0;
    if (pivot != k) { std::swap(a[pivot], a[k]); sign = -sign; }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = exact_div(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign < 0 ? Int(-a[n - 1][n - 1]) : a[n - 1][n - 1];
}

}  // namespace

Rat determinant(const ExactMatrix& m) {
  if (!m.is_square()) throw std::logic_error("determinant: matrix not square");
  auto [a, scale] = to_row_scaled_integers(m);
  Rat d(integer_bareiss_det(a));
  d /= Rat(scale);
  return d;
}

int rank(const ExactMatrix& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = m.at(r, c);
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r)
      if (a[r][c] != 0) { pivot = r; break; }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rk]);
    for (int r = rk + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      Rat f = a[r][c] / a[rk][c];
      for (int j = c; j < cols; ++j) a[r][j] -= f * a[rk][j];
    }
    ++rk;
  }
  return rk;
}

Polynomial char_poly(const ExactMatrix& m) {
  if (!m.is_square()) throw std::logic_error("char_poly: matrix not square");
  const int n = m.rows();
  if (n == 0) return Polynomial(std::vector<Rat>{Rat(1)});

  // Scale to an integer matrix B = s*A so the power traces stay integral.
  Int s = 1;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) s = lcm(s, Int(m.at(r, c).get_den()));
  std::vector<Int> b(static_cast<size_t>(n) * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      const Rat& x = m.at(r, c);
      b[static_cast<size_t>(r) * n + c] = Int(x.get_num()) * exact_div(s, Int(x.get_den()));
    }

  // Power traces p_k = tr(B^k) for k = 1..n.
  std::vector<Int> p(static_cast<size_t>(n) + 1);
  std::vector<Int> pw = b, nxt(static_cast<size_t>(n) * n);
  for (int k = 1; k <= n; ++k) {
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += pw[static_cast<size_t>(i) * n + i];
    p[static_cast<size_t>(k)] = tr;
    if (k == n) break;
    for (auto& x : nxt) x = 0;
    for (int r = 0; r < n; ++r)
      for (int t = 0; t < n; ++t) {
        const Int& a = pw[static_cast<size_t>(r) * n + t];
        if (a == 0) continue;
        for (int c = 0; c < n; ++c)
          nxt[static_cast<size_t>(r) * n + c] += a * b[static_cast<size_t>(t) * n + c];
      }
    pw.swap(nxt);
  }

  // Newton's identities: k*e_k = sum_{i=1..k} (-1)^(i-1) e_{k-i} p_i.
  std::vector<Rat> e(static_cast<size_t>(n) + 1);
  e[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rat acc = 0;
    for (int i = 1; i <= k; ++i) {
      Rat term = e[static_cast<size_t>(k - i)] * Rat(p[static_cast<size_t>(i)]);
      if (i % 2 == 0) acc -= term; else acc += term;
    }
    e[static_cast<size_t>(k)] = acc / k;
  }

  // chi_B(t) = sum_k (-1)^k e_k t^(n-k); chi_A(t) = s^(-n) chi_B(s*t), so the
  // t^j coefficient of chi_A is the t^j coefficient of chi_B divided by s^(n-j).
  std::vector<Rat> coeffs(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    int k = n - j;
    Rat c = e[static_cast<size_t>(k)];
    if (k % 2 != 0) c = -c;
    coeffs[static_cast<size_t>(j)] = c / Rat(int_pow(s, static_cast<unsigned long>(n - j)));
  }
  return Polynomial(std::move(coeffs));
}

Rat cofactor(const ExactMatrix& m, int i, int j) {
  Rat d = determinant(m.minor_matrix(i, j));
  return ((i + j) % 2 == 0) ? d : -d;
}

SpectrumCheck verify_spectrum(const ExactMatrix& m, const Spectrum& claimed) {
  if (!m.is_square()) throw std::logic_error("verify_spectrum: matrix not square");
  if (claimed.dimension() != m.rows())
    throw std::invalid_argument("verify_spectrum: claimed dimension != matrix size");
  SpectrumCheck check;
  check.char_poly_match = (char_poly(m) == claimed.char_poly());
  check.diagonalizable = true;
  for (const auto& [value, mult] : claimed.pairs()) {
    ExactMatrix shifted = m - ExactMatrix::identity(m.rows()) * value;
    if (m.rows() - rank(shifted) != mult) { check.diagonalizable = false; break; }
  }
  for (const auto& [value, mult] : claimed.pairs()) {
    if (value > 0) check.inertia.positive += mult;
    else if (value < 0) check.inertia.negative += mult;
    else check.inertia.zero += mult;
  }
  return check;
}

}  // namespace kirchhoff
