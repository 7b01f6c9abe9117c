#pragma once

#include <cstddef>
#include <vector>

#include "ncinv/cyclotomic.hpp"

namespace ncinv {

/// Dense row-major matrix over cyclotomic numbers.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  Cyclotomic& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
  const Cyclotomic& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

  std::vector<Cyclotomic> column(std::size_t j) const;
  Cyclotomic trace() const;
  Matrix conjugate_transpose() const;
  Matrix conjugate() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& x, const Matrix& y);
  friend Matrix operator+(const Matrix& x, const Matrix& y);
  friend Matrix operator-(const Matrix& x, const Matrix& y);
  friend Matrix operator*(const Cyclotomic& s, const Matrix& x);
  friend bool operator==(const Matrix& x, const Matrix& y);
  friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<Cyclotomic> a_;
};

std::vector<Cyclotomic> apply(const Matrix& m, const std::vector<Cyclotomic>& v);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);
std::size_t rank(Matrix m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Cyclotomic>> nullspace(const Matrix& m);
/// Maximal linearly independent subset of the columns, as vectors (first occurrences kept).
std::vector<std::vector<Cyclotomic>> column_basis(const Matrix& m);
/// Throws ArithmeticError when singular.
Matrix inverse(const Matrix& m);
/// Matrix whose columns are the given vectors.
Matrix from_columns(const std::vector<std::vector<Cyclotomic>>& cols, std::size_t rows);

}  // namespace ncinv
