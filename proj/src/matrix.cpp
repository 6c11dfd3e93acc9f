#include "tlj/matrix.hpp"

#include <utility>

namespace tlj {

Matrix::Matrix(int rows, int cols, const Scalar& fill)
    : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows * cols), fill) {}

Matrix Matrix::identity(int n, const Scalar& one) {
  Matrix m(n, n, one - one);
  for (int i = 0; i < n; ++i) m(i, i) = one;
  return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!(a.a_[i] == b.a_[i])) return false;
  return true;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeMismatch("matrix sum shapes differ");
  Matrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + b.scaled(Scalar(-1)); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ShapeMismatch("matrix product shapes differ");
  Matrix c(a.rows_, b.cols_, a(0, 0) - a(0, 0));
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix m = *this;
  for (auto& x : m.a_) x = x * c;
  return m;
}

Matrix Matrix::transposed() const {
  Matrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

Matrix Matrix::bar() const {
  Matrix m = *this;
  for (auto& x : m.a_) x = x.bar();
  return m;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (!((*this)(i, j) == (*this)(j, i))) return false;
  return true;
}

bool Matrix::is_diagonal() const {
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (i != j && !(*this)(i, j).is_zero()) return false;
  return true;
}

namespace {

// Bareiss elimination in place; returns (rank, sign of row permutation).
std::pair<int, int> bareiss(Matrix& m) {
  const int rows = m.rows(), cols = m.cols();
  int sign = 1, r = 0;
  Scalar prev = 1;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      sign = -sign;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) m(i, j) = (m(r, c) * m(i, j) - m(i, c) * m(r, j)) / prev;
      m(i, c) = 0;
    }
    prev = m(r, c);
    ++r;
  }
  return {r, sign};
}

}  // namespace

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  auto [r, sign] = bareiss(m);
  if (r < n) return m(0, 0) - m(0, 0);
  return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

int rank(Matrix m) { return bareiss(m).first; }

// ---------------------------------------------------------------------------

int signature(const QMatrix& in) {
  QMatrix a = in;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw ShapeMismatch("signature needs a square matrix");
    for (std::size_t j = 0; j < i; ++j)
      if (a[i][j] != a[j][i]) throw InvalidParameters("signature needs a symmetric matrix");
  }
  int pos = 0, neg = 0;
  // congruence transformations on the trailing block [k, n)
  auto add_to = [&](std::size_t dst, std::size_t src, const mpq_class& c) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] += c * a[src][j];
    for (std::size_t j = 0; j < n; ++j) a[j][dst] += c * a[j][src];
  };
  auto swap_idx = [&](std::size_t p, std::size_t q) {
    std::swap(a[p], a[q]);
    for (auto& row : a) std::swap(row[p], row[q]);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (is_zero(a[k][k])) {
      std::size_t piv = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (!is_zero(a[i][i])) {
          piv = i;
          break;
        }
      if (piv < n) {
        swap_idx(k, piv);
      } else {
        std::size_t off = n;
        for (std::size_t j = k + 1; j < n; ++j)
          if (!is_zero(a[k][j])) {
            off = j;
            break;
          }
        if (off == n) continue;  // zero row: null direction
        // a_kk = 0 = a_jj, a_kj != 0: e_k + e_j has norm 2 a_kj
        add_to(k, off, 1);
      }
    }
    const mpq_class p = a[k][k];
    if (sgn(p) > 0) ++pos;
    else ++neg;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(a[i][k])) continue;
      mpq_class c = -a[i][k] / p;
      add_to(i, k, c);
    }
  }
  return pos - neg;
}

int rank(QMatrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!is_zero(a[i][c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (is_zero(a[i][c])) continue;
      mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

QMatrix null_space(const QMatrix& in) {
  if (in.empty()) return {};
  QMatrix a = in;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (!is_zero(a[i][c])) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    mpq_class inv = 1 / a[r][c];
    for (std::size_t j = 0; j < cols; ++j) a[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(a[i][c])) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  QMatrix basis;
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace tlj
