#include "ncinv/linalg.hpp"

#include "ncinv/errors.hpp"

namespace ncinv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Cyclotomic(1);
  return m;
}

std::vector<Cyclotomic> Matrix::column(std::size_t j) const {
  std::vector<Cyclotomic> v(r_);
  for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
  return v;
}

Cyclotomic Matrix::trace() const {
  Cyclotomic t;
  for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
  return t;
}

Matrix Matrix::conjugate_transpose() const {
  Matrix m(c_, r_);
  for (std::size_t i = 0; i < r_; ++i) {
    for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j).conjugate();
  }
  return m;
}

Matrix Matrix::conjugate() const {
  Matrix m(r_, c_);
  for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i].conjugate();
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix operator*(const Matrix& x, const Matrix& y) {
  if (x.c_ != y.r_) throw InternalError("matrix shape mismatch in product");
  Matrix m(x.r_, y.c_);
  for (std::size_t i = 0; i < x.r_; ++i) {
    for (std::size_t k = 0; k < x.c_; ++k) {
      const Cyclotomic& xik = x(i, k);
      if (xik.is_zero()) continue;
      for (std::size_t j = 0; j < y.c_; ++j) {
        if (!y(k, j).is_zero()) m(i, j) += xik * y(k, j);
      }
    }
  }
  return m;
}

Matrix operator+(const Matrix& x, const Matrix& y) {
  if (x.r_ != y.r_ || x.c_ != y.c_) throw InternalError("matrix shape mismatch in sum");
  Matrix m = x;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += y.a_[i];
  return m;
}

Matrix operator-(const Matrix& x, const Matrix& y) {
  if (x.r_ != y.r_ || x.c_ != y.c_) throw InternalError("matrix shape mismatch in difference");
  Matrix m = x;
  for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= y.a_[i];
  return m;
}

Matrix operator*(const Cyclotomic& s, const Matrix& x) {
  Matrix m = x;
  for (auto& v : m.a_) v *= s;
  return m;
}

bool operator==(const Matrix& x, const Matrix& y) {
  if (x.r_ != y.r_ || x.c_ != y.c_) return false;
  for (std::size_t i = 0; i < x.a_.size(); ++i) {
    if (x.a_[i] != y.a_[i]) return false;
  }
  return true;
}

std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& v) {
  std::vector<Cyclotomic> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !v[j].is_zero()) out[i] += m(i, j) * v[j];
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && m(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(row, k), m(piv, k));
    }
    const Cyclotomic inv = m(row, col).inverse();
    for (std::size_t k = col; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Cyclotomic f = m(r, col);
      for (std::size_t k = col; k < m.cols(); ++k) {
        if (!m(row, k).is_zero()) m(r, k) -= f * m(row, k);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(Matrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Cyclotomic>> nullspace(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Cyclotomic>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Cyclotomic> v(m.cols());
    v[free] = Cyclotomic(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Cyclotomic>> column_basis(const Matrix& m) {
  Matrix r = m;
  const auto pivots = row_reduce(r);
  std::vector<std::vector<Cyclotomic>> out;
  for (auto p : pivots) out.push_back(m.column(p));
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = Cyclotomic(1);
  }
  const auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw ArithmeticError("matrix is singular");
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = aug(i, n + j);
  }
  return out;
}

Matrix from_columns(const std::vector<std::vector<Cyclotomic>>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

}  // namespace ncinv
