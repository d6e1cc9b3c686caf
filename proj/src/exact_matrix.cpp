#include "kirchhoff/exact_matrix.hpp"

#include <stdexcept>

namespace kirchhoff {

ExactMatrix::ExactMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
  data_.assign(static_cast<size_t>(rows) * cols, Rat(0));
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::all_ones(int rows, int cols) {
  ExactMatrix m(rows, cols);
  for (auto& x : m.data_) x = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rat>& d) {
  ExactMatrix m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = r + 1; c < cols_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

bool ExactMatrix::is_integral() const {
  for (const auto& x : data_)
    if (x.get_den() != 1) return false;
  return true;
}

Rat ExactMatrix::trace() const {
  if (!is_square()) throw std::logic_error("trace: matrix not square");
  Rat t = 0;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

ExactMatrix ExactMatrix::minor_matrix(int dr, int dc) const {
  if (dr < 0 || dr >= rows_ || dc < 0 || dc >= cols_)
    throw std::out_of_range("minor_matrix: index out of range");
  ExactMatrix m(rows_ - 1, cols_ - 1);
  for (int r = 0, rr = 0; r < rows_; ++r) {
    if (r == dr) continue;
    for (int c = 0, cc = 0; c < cols_; ++c) {
      if (c == dc) continue;
      m.at(rr, cc) = at(r, c);
      ++cc;
    }
    ++rr;
  }
  return m;
}

ExactMatrix ExactMatrix::submatrix(int r0, int r1, int c0, int c1) const {
  if (r0 < 0 || r1 > rows_ || c0 < 0 || c1 > cols_ || r0 > r1 || c0 > c1)
    throw std::out_of_range("submatrix: bad range");
  ExactMatrix m(r1 - r0, c1 - c0);
  for (int r = r0; r < r1; ++r)
    for (int c = c0; c < c1; ++c) m.at(r - r0, c - c0) = at(r, c);
  return m;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix +: shape mismatch");
  ExactMatrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] + o.data_[i];
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix -: shape mismatch");
  ExactMatrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] - o.data_[i];
  return m;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix *: shape mismatch");
  ExactMatrix m(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rat& a = at(r, k);
      if (a == 0) continue;
      for (int c = 0; c < o.cols_; ++c) m.at(r, c) += a * o.at(k, c);
    }
  return m;
}

ExactMatrix ExactMatrix::operator*(const Rat& s) const {
  ExactMatrix m(rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i] * s;
  return m;
}

}  // namespace kirchhoff
