#pragma once

#include <vector>

#include "kirchhoff/rational.hpp"

namespace kirchhoff {

// Dense matrix over Q.  Row-major, exact entries.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);
  static ExactMatrix all_ones(int rows, int cols);
  static ExactMatrix diagonal(const std::vector<Rat>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const Rat& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_integral() const;
  Rat trace() const;

  // Copy with row `dr` and column `dc` removed.
  ExactMatrix minor_matrix(int dr, int dc) const;
  // Copy of rows [r0, r1) x cols [c0, c1).
  ExactMatrix submatrix(int r0, int r1, int c0, int c1) const;

  ExactMatrix operator+(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator*(const Rat& s) const;
  bool operator==(const ExactMatrix& o) const = default;

 private:
  int rows_, cols_;
  std::vector<Rat> data_;
};

}  // namespace kirchhoff
