#include "cubmot/matrix.hpp"

#include <sstream>
#include <utility>

#include "cubmot/error.hpp"

namespace cubmot {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    require(r.size() == cols_, ErrorKind::structural, "ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  require(v.size() == rows_, ErrorKind::structural, "column length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  require(r0 + nr <= rows_ && c0 + nc <= cols_, ErrorKind::structural, "block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

Matrix Matrix::hstack(const Matrix& rhs) const {
  require(rows_ == rhs.rows_, ErrorKind::structural, "hstack row mismatch");
  Matrix m(rows_, cols_ + rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c);
    for (std::size_t c = 0; c < rhs.cols_; ++c) m(r, cols_ + c) = rhs(r, c);
  }
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorKind::structural, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require(rows_ == rhs.rows_ && cols_ == rhs.cols_, ErrorKind::structural, "matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
}

std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t c = 0; c < m.cols() && prow < m.rows(); ++c) {
    std::size_t sel = prow;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != prow)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(sel, k), m(prow, k));
    Rational inv = 1 / m(prow, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(prow, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == prow || m(r, c) == 0) continue;
      Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(prow, k);
    }
    pivots.push_back(c);
    ++prow;
  }
  return pivots;
}

std::size_t Matrix::rank() const {
  Matrix t = *this;
  return rref(t).size();
}

Rational Matrix::determinant() const {
  require(is_square(), ErrorKind::structural, "determinant of non-square matrix");
  Matrix m = *this;
  Rational det = 1;
  for (std::size_t c = 0; c < cols_; ++c) {
    std::size_t sel = c;
    while (sel < rows_ && m(sel, c) == 0) ++sel;
    if (sel == rows_) return 0;
    if (sel != c) {
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(sel, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t r = c + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return det;
}

Matrix Matrix::inverse() const {
  require(is_square(), ErrorKind::structural, "inverse of non-square matrix");
  Matrix aug = hstack(identity(rows_));
  auto piv = rref(aug);
  require(piv.size() == rows_ && (rows_ == 0 || piv.back() == rows_ - 1), ErrorKind::domain,
          "matrix is singular");
  return aug.block(0, cols_, rows_, cols_);
}

Matrix Matrix::nullspace() const {
  Matrix m = *this;
  auto piv = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(cols_);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
    basis.push_back(std::move(v));
  }
  return from_columns(basis, cols_);
}

Matrix Matrix::column_space() const {
  Matrix m = *this;
  auto piv = rref(m);
  std::vector<Vector> cols;
  for (auto p : piv) cols.push_back(column(p));
  return from_columns(cols, rows_);
}

Matrix Matrix::solve(const Matrix& rhs) const {
  require(rhs.rows_ == rows_, ErrorKind::structural, "solve: row mismatch");
  Matrix aug = hstack(rhs);
  auto piv = rref(aug);
  for (auto p : piv)
    require(p < cols_, ErrorKind::domain, "solve: inconsistent system");
  Matrix x(cols_, rhs.cols_);
  for (std::size_t i = 0; i < piv.size(); ++i)
    for (std::size_t c = 0; c < rhs.cols_; ++c) x(piv[i], c) = aug(i, cols_ + c);
  return x;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorKind::structural, "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += aik * b(k, j);
    }
  return c;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.cols() == v.size(), ErrorKind::structural, "matrix-vector shape mismatch");
  Vector r = zero_vector(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (a(i, k) != 0 && v[k] != 0) r[i] += a(i, k) * v[k];
  return r;
}

Rational bilinear(const Vector& u, const Matrix& gram, const Vector& v) {
  return dot(u, gram * v);
}

}  // namespace cubmot
