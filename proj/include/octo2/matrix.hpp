#pragma once
/**
 * @file matrix.hpp
 * @brief Dense matrices over a Field with exact Gaussian elimination.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "octo2/field.hpp"

namespace octo2 {

using Vec = std::vector<Fe>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols) : f_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

  static Matrix identity(Field f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
    return m;
  }
  /// Rows given as vectors; all must have length `cols`.
  static Matrix from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) fail(ErrorCode::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(Field f, const std::vector<Vec>& cols, std::size_t rows) {
    return from_rows(f, cols, rows).transpose();
  }

  [[nodiscard]] const Field& field() const noexcept { return f_; }
  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  Fe& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Fe& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  [[nodiscard]] Vec row(std::size_t i) const { return Vec(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)); }
  [[nodiscard]] Vec col(std::size_t j) const {
    Vec v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
  }
  [[nodiscard]] std::vector<Vec> row_list() const {
    std::vector<Vec> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  [[nodiscard]] Matrix transpose() const {
    Matrix t(f_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.f_ == b.f_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape");
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape");
    Matrix r(a.f_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Fe& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) r(i, j) += x * b(k, j);
      }
    return r;
  }

  [[nodiscard]] Vec apply(const Vec& v) const {
    if (v.size() != cols_) fail(ErrorCode::DimensionMismatch, "matrix-vector shape");
    Vec out(rows_, f_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!(*this)(i, j).is_zero() && !v[j].is_zero()) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  [[nodiscard]] std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  Field f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Fe> a_;
};

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Fe inv = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Fe s = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!m(r, j).is_zero()) m(i, j) += s * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline std::size_t rank(Matrix m) { return rref(m).size(); }

/// Rows form a basis of {v : A v = 0}.
inline Matrix kernel_basis(Matrix a) {
  auto piv = rref(a);
  std::vector<bool> is_piv(a.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  const Field& f = a.field();
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_piv[free]) continue;
    Vec v(a.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = a(i, free);
    basis.push_back(std::move(v));
  }
  return Matrix::from_rows(f, basis, a.cols());
}

inline Fe det(Matrix m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const Field& f = m.field();
  Fe d = f.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c).is_zero()) ++p;
    if (p == n) return f.zero();
    if (p != c)
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));  // sign is irrelevant in char 2
    d *= m(c, c);
    Fe inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Fe s = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) += s * m(c, j);
    }
  }
  return d;
}

inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = m.field().one();
  }
  auto piv = rref(aug);
  if (piv.size() < n || piv[n - 1] != n - 1) fail(ErrorCode::Singular, "matrix is singular");
  Matrix r(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

/// Some x with A x = b; throws Singular when the system is inconsistent.
inline Vec solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) fail(ErrorCode::DimensionMismatch, "right-hand side length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == a.cols()) fail(ErrorCode::Singular, "linear system is inconsistent");
  Vec x(a.cols(), a.field().zero());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
  return x;
}

/// Basis of the row span in reduced echelon form.
inline Matrix row_space(Matrix m) {
  auto piv = rref(m);
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < piv.size(); ++i) rows.push_back(m.row(i));
  return Matrix::from_rows(m.field(), rows, m.cols());
}

inline bool in_row_span(const Matrix& basis, const Vec& v) {
  std::vector<Vec> rows = basis.row_list();
  rows.push_back(v);
  return rank(Matrix::from_rows(basis.field(), rows, v.size())) == rank(basis);
}

}  // namespace octo2
