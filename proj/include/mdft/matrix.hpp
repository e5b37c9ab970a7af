#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mdft/polynomials.hpp"
#include "mdft/scalar.hpp"

namespace mdft {

/// Raised by inverse() on a singular matrix; carries the rank found.
class SingularMatrixError : public std::domain_error {
 public:
  SingularMatrixError(std::size_t rank, std::size_t n)
      : std::domain_error("matrix is singular: rank " + std::to_string(rank) + " < " + std::to_string(n)), rank_(rank) {}
  std::size_t rank() const { return rank_; }

 private:
  std::size_t rank_;
};

/// Dense row-major matrix over an exact field.
template <FieldScalar T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), data_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const T& zero) {
    Matrix m(n, n, zero);
    const T one = from_int(zero, 1);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  /// Throws std::invalid_argument for ragged input.
  static Matrix from_rows(const T& zero, const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols, zero);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const T& zero_scalar() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  /// Rows [r0, r1) and columns [c0, c1).
  Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    Matrix out(r1 - r0, c1 - c0, zero_);
    for (std::size_t i = r0; i < r1; ++i)
      for (std::size_t j = c0; j < c1; ++j) out(i - r0, j - c0) = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }
  bool is_identity() const { return is_square() && *this == identity(rows_, zero_); }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.require_shape(b, "+");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = T(a.data_[i] + b.data_[i]);
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.require_shape(b, "-");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] = T(a.data_[i] - b.data_[i]);
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix *: inner dimensions differ");
    Matrix out(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (detail::scalar_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = T(out(i, j) + x * b(k, j));
      }
    }
    return out;
  }
  friend Matrix operator*(Matrix a, const T& s) {
    for (auto& x : a.data_) x = T(x * s);
    return a;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("Matrix * vector: dimension mismatch");
    std::vector<T> out(a.rows_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] = T(out[i] + a(i, j) * v[j]);
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_shape(const Matrix& b, const char* op) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument(std::string("Matrix ") + op + ": shapes differ");
  }

  std::size_t rows_;
  std::size_t cols_;
  T zero_;
  std::vector<T> data_;
};

template <FieldScalar T>
struct RrefResult {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank;
};

/// Reduced row-echelon form: leftmost pivot column first, the topmost
/// nonzero row below the current one becomes the pivot row.
template <FieldScalar T>
RrefResult<T> rref(Matrix<T> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < m.rows() && is_zero(m(pivot, c))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(r, j));
    const T inv = T(from_int(m.zero_scalar(), 1) / m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = T(m(r, j) * inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = T(m(i, j) - factor * m(r, j));
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots), r};
}

template <FieldScalar T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank;
}

/// Basis of {v : m v = 0}, one vector per free column.
template <FieldScalar T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
  const auto [r, pivots, rk] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), m.zero_scalar());
    v[free] = from_int(m.zero_scalar(), 1);
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = T(-r(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Exact inverse via rref of [M | I]. Throws SingularMatrixError.
template <FieldScalar T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse: matrix is not square");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n, m.zero_scalar());
  const T one = from_int(m.zero_scalar(), 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = one;
  }
  const auto res = rref(std::move(aug));
  std::size_t left_rank = 0;
  while (left_rank < res.pivots.size() && res.pivots[left_rank] < n) ++left_rank;
  if (left_rank < n) throw SingularMatrixError(left_rank, n);
  return res.reduced.block(0, n, n, 2 * n);
}

template <FieldScalar T>
Matrix<T> mat_pow(Matrix<T> base, std::uint64_t e) {
  if (!base.is_square()) throw std::invalid_argument("mat_pow: matrix is not square");
  Matrix<T> result = Matrix<T>::identity(base.rows(), base.zero_scalar());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

namespace detail {

// Coefficients of det(xI - m), leading first (Berkowitz).
template <FieldScalar T>
std::vector<T> berkowitz_vector(const Matrix<T>& m) {
  const T& zero = m.zero_scalar();
  const T one = from_int(zero, 1);
  const std::size_t n = m.rows();
  if (n == 0) return {one};
  if (n == 1) return {one, T(-m(0, 0))};
  const Matrix<T> sub = m.block(1, n, 1, n);
  // diags: 1, -a, -R C, -R A C, ..., -R A^{n-2} C.
  std::vector<T> diags{one, T(-m(0, 0))};
  std::vector<T> c = m.block(1, n, 0, 1).col(0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (i > 0) c = sub * c;
    T acc = zero;
    for (std::size_t j = 0; j + 1 < n; ++j) acc = T(acc + m(0, j + 1) * c[j]);
    diags.push_back(T(-acc));
  }
  const std::vector<T> inner = berkowitz_vector(sub);
  // Toeplitz (n+1) x n lower-triangular product with inner (length n).
  std::vector<T> out(n + 1, zero);
  for (std::size_t i = 0; i <= n; ++i)
    for (std::size_t j = 0; j <= i && j < n; ++j) out[i] = T(out[i] + diags[i - j] * inner[j]);
  return out;
}

}  // namespace detail

/// det(xI - M) by the division-free Berkowitz recursion. Throws
/// std::invalid_argument for non-square input.
template <FieldScalar T>
Poly<T> char_poly(const Matrix<T>& m) {
  if (!m.is_square()) throw std::invalid_argument("char_poly: matrix is not square");
  std::vector<T> c = detail::berkowitz_vector(m);
  std::reverse(c.begin(), c.end());
  return Poly<T>(m.zero_scalar(), std::move(c));
}

/// p(M) by Horner's rule.
template <FieldScalar T>
Matrix<T> evaluate(const Poly<T>& p, const Matrix<T>& m) {
  Matrix<T> acc(m.rows(), m.cols(), m.zero_scalar());
  const Matrix<T> id = Matrix<T>::identity(m.rows(), m.zero_scalar());
  for (std::size_t i = p.coefficients().size(); i-- > 0;) acc = acc * m + id * p.coefficients()[i];
  return acc;
}

}  // namespace mdft
