#pragma once

#include "redinv/error.hpp"
#include "redinv/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace redinv {

/// Dense integer matrix, row-major. Maps act on column vectors: a matrix
/// with `rows() == m` and `cols() == n` is a homomorphism Z^n -> Z^m.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, IntVector entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionMismatch("IntMatrix: entry count " + std::to_string(data_.size()) +
                              " != " + std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  IntMatrix(std::initializer_list<std::initializer_list<long long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
      if (r.size() != cols_) throw DimensionMismatch("IntMatrix: ragged initializer");
      for (long long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
  static IntMatrix diagonal(const IntVector& d) {
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static IntMatrix fromRows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DimensionMismatch("fromRows: row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static IntMatrix column(const IntVector& v) { return IntMatrix(v.size(), 1, v); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Integer> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Integer> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  IntVector rowVector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }
  IntVector columnVector(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  const IntVector& entries() const { return data_; }

  bool isZero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }
  bool rowIsZero(std::size_t i) const {
    for (const auto& x : row(i))
      if (x != 0) return false;
    return true;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntVector apply(const IntVector& x) const {
    if (x.size() != cols_) throw DimensionMismatch("apply: vector length mismatch");
    IntVector y(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      Integer s = 0;
      for (std::size_t j = 0; j < cols_; ++j)
        if (x[j] != 0 && (*this)(i, j) != 0) s += (*this)(i, j) * x[j];
      y[i] = std::move(s);
    }
    return y;
  }

  IntMatrix submatrix(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    IntMatrix s(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) s(i, j) = (*this)(r0 + i, c0 + j);
    return s;
  }
  IntMatrix selectRows(const std::vector<std::size_t>& idx) const {
    IntMatrix s(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
    return s;
  }
  IntMatrix selectColumns(const std::vector<std::size_t>& idx) const {
    IntMatrix s(rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
    return s;
  }
  void setBlock(std::size_t r0, std::size_t c0, const IntMatrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  // Elementary operations used by the normal-form routines.
  void swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swapColumns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void negateRow(std::size_t a) {
    for (auto& x : row(a)) x = -x;
  }
  void negateColumn(std::size_t a) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, a) = -(*this)(i, a);
  }
  /// row[dst] += q * row[src]
  void addRowMultiple(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(src, j) != 0) (*this)(dst, j) += q * (*this)(src, j);
  }
  /// col[dst] += q * col[src]
  void addColumnMultiple(std::size_t dst, std::size_t src, const Integer& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if ((*this)(i, src) != 0) (*this)(i, dst) += q * (*this)(i, src);
  }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_)
      throw DimensionMismatch("matrix product: " + std::to_string(a.rows_) + "x" +
                              std::to_string(a.cols_) + " * " + std::to_string(b.rows_) + "x" +
                              std::to_string(b.cols_));
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Integer& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (b(k, j) != 0) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix difference");
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend IntMatrix operator*(const Integer& s, IntMatrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows_; ++i) {
      os << (i ? ", [" : "[");
      for (std::size_t j = 0; j < m.cols_; ++j) os << (j ? ", " : "") << m(i, j);
      os << ']';
    }
    return os << ']';
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  IntVector data_;
};

inline IntMatrix hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
  IntMatrix m(a.rows(), a.cols() + b.cols());
  m.setBlock(0, 0, a);
  m.setBlock(0, a.cols(), b);
  return m;
}

inline IntMatrix vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  IntMatrix m(a.rows() + b.rows(), a.cols());
  m.setBlock(0, 0, a);
  m.setBlock(a.rows(), 0, b);
  return m;
}

inline IntMatrix blockDiagonal(const std::vector<IntMatrix>& blocks) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) r += b.rows(), c += b.cols();
  IntMatrix m(r, c);
  r = c = 0;
  for (const auto& b : blocks) {
    m.setBlock(r, c, b);
    r += b.rows();
    c += b.cols();
  }
  return m;
}

inline IntMatrix blockDiagonal(const IntMatrix& a, const IntMatrix& b) { return blockDiagonal({a, b}); }

inline bool isZeroVector(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Determinant by fraction-free (Bareiss) elimination.
inline Integer determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swapRows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace redinv
