#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "toda/rational.hpp"

namespace toda::linalg {

// Dense row-major matrix over an exact or floating scalar. Instances are
// value types; all operations return fresh matrices.
template <class T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols, T fill = T(0))
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ ? static_cast<int>(rows.begin()->size()) : 0;
    data_.reserve(static_cast<size_t>(rows_) * cols_);
    for (const auto& r : rows) {
      if (static_cast<int>(r.size()) != cols_) throw std::invalid_argument("ragged matrix literal");
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int i, int j) {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }
  const T& operator()(int i, int j) const {
    assert(i >= 0 && i < rows_ && j >= 0 && j < cols_);
    return data_[static_cast<size_t>(i) * cols_ + j];
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T(0)) continue;
        for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
      }
    return r;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same_shape(o);
    Matrix r = *this;
    for (size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
  }
  Matrix operator*(const T& s) const {
    Matrix r = *this;
    for (auto& x : r.data_) x *= s;
    return r;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  // Submatrix with the given row indices (0-based) and columns [0, k).
  Matrix leading_columns_submatrix(const std::vector<int>& row_idx, int k) const {
    Matrix r(static_cast<int>(row_idx.size()), k);
    for (int i = 0; i < r.rows(); ++i)
      for (int j = 0; j < k; ++j) r(i, j) = (*this)(row_idx[i], j);
    return r;
  }

  Matrix leading_block(int k) const {
    Matrix r(k, k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) r(i, j) = (*this)(i, j);
    return r;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<T> data_;
};

template <class T>
T abs_value(const T& x) {
  return x < T(0) ? T(-x) : x;
}

// Determinant by Gaussian elimination with row swaps. Exact over Rat;
// partial pivoting keeps the float instantiation honest.
template <class T>
T determinant(Matrix<T> m) {
  if (!m.square()) throw std::invalid_argument("determinant needs a square matrix");
  const int n = m.rows();
  T det(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    T best(0);
    for (int r = c; r < n; ++r) {
      T mag = abs_value(m(r, c));
      if (pivot < 0 || mag > best) {
        pivot = r;
        best = mag;
      }
    }
    if (best == T(0)) return T(0);
    if (pivot != c) {
      for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == T(0)) continue;
      T f = m(r, c) / m(c, c);
      for (int j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Inverse of a unit lower-triangular matrix by forward substitution.
template <class T>
Matrix<T> invert_unit_lower(const Matrix<T>& u) {
  const int n = u.rows();
  Matrix<T> inv = Matrix<T>::identity(n);
  for (int j = 0; j < n; ++j)
    for (int i = j + 1; i < n; ++i) {
      T s(0);
      for (int k = j; k < i; ++k) s += u(i, k) * inv(k, j);
      inv(i, j) = -s;
    }
  return inv;
}

// Inverse of an upper-triangular matrix with nonzero diagonal.
template <class T>
Matrix<T> invert_upper(const Matrix<T>& b) {
  const int n = b.rows();
  Matrix<T> inv(n, n);
  for (int j = n - 1; j >= 0; --j) {
    if (b(j, j) == T(0)) throw std::invalid_argument("singular upper-triangular matrix");
    inv(j, j) = T(1) / b(j, j);
    for (int i = j - 1; i >= 0; --i) {
      T s(0);
      for (int k = i + 1; k <= j; ++k) s += b(i, k) * inv(k, j);
      inv(i, j) = -s / b(i, i);
    }
  }
  return inv;
}

template <class T>
T trace(const Matrix<T>& m) {
  T s(0);
  for (int i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

template <class T>
T max_abs(const Matrix<T>& m) {
  T s(0);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) s = std::max<T>(s, abs_value(m(i, j)));
  return s;
}

template <class F>
Matrix<F> to_float_matrix(const Matrix<Rat>& m) {
  Matrix<F> r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = to_float<F>(m(i, j));
  return r;
}

// Characteristic polynomial coefficients of det(xI - M), leading first,
// by the Faddeev-LeVerrier recurrence. Works in both scalar regimes.
template <class T>
std::vector<T> char_poly(const Matrix<T>& m) {
  if (!m.square()) throw std::invalid_argument("char_poly needs a square matrix");
  const int n = m.rows();
  std::vector<T> coeff(n + 1, T(0));
  coeff[0] = T(1);
  Matrix<T> acc = Matrix<T>::identity(n);
  for (int k = 1; k <= n; ++k) {
    acc = m * acc;
    T c = -trace(acc) / T(k);
    coeff[k] = c;
    for (int i = 0; i < n; ++i) acc(i, i) += c;
  }
  return coeff;
}

}  // namespace toda::linalg
