#pragma once

#include <vector>

#include "tlj/scalar.hpp"

namespace tlj {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const Scalar& fill = Scalar(0));
  static Matrix identity(int n, const Scalar& one = Scalar(1));

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Scalar& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i * cols_ + j)]; }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix scaled(const Scalar& c) const;
  Matrix transposed() const;
  /// Entrywise conjugation.
  Matrix bar() const;
  bool is_symmetric() const;
  bool is_diagonal() const;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Scalar> a_;
};

/// Determinant by fraction-free (Bareiss) elimination.
Scalar determinant(Matrix m);
/// Rank by fraction-free elimination.
int rank(Matrix m);

/// Rational matrices for the integer/rational linear algebra of the
/// 3-manifold module.
using QMatrix = std::vector<std::vector<mpq_class>>;

/// Signature of a symmetric rational matrix by congruence diagonalisation.
int signature(const QMatrix& m);
/// Basis of the right null space.
QMatrix null_space(const QMatrix& m);
int rank(QMatrix m);

}  // namespace tlj
