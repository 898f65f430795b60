#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "cubmot/rational.hpp"

namespace cubmot {

// Dense row-major matrix over Q. Sizes here are small (at most a few dozen),
// so elimination is plain Gauss-Jordan on mpq values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(const Vector& d);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  std::vector<Vector> columns() const;
  void set_column(std::size_t c, const Vector& v);

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix hstack(const Matrix& rhs) const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(const Rational& s);

  bool is_zero() const;
  bool is_symmetric() const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  std::size_t rank() const;
  Rational determinant() const;
  /// Throws Error{domain} when singular.
  Matrix inverse() const;
  /// Basis of {x : A x = 0}, as columns.
  Matrix nullspace() const;
  /// Columns of a basis of the column space (a subset of the original columns).
  Matrix column_space() const;
  /// Solves A X = B; throws Error{domain} when inconsistent. Free variables set to zero.
  Matrix solve(const Matrix& rhs) const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);
Vector operator*(const Matrix& a, const Vector& v);

/// u^T G v
Rational bilinear(const Vector& u, const Matrix& gram, const Vector& v);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

}  // namespace cubmot
