#pragma once

#include <cstddef>
#include <vector>

#include "rankring/errors.hpp"

namespace rankring {

/// Dense row-major matrix. Ring operations live in the ring object, so this is
/// plain storage plus shape bookkeeping.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  void set_row(std::size_t i, const std::vector<T>& v) {
    if (v.size() != cols_) throw DimensionMismatch("row length");
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void append_row(const std::vector<T>& v) {
    if (rows_ == 0 && data_.empty()) cols_ = v.size();
    if (v.size() != cols_) throw DimensionMismatch("row length");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    Matrix t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.data_.reserve(data_.size());
    for (std::size_t j = 0; j < cols_; ++j)
      for (std::size_t i = 0; i < rows_; ++i) t.data_.push_back((*this)(i, j));
    return t;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m;
    for (const auto& r : rows) m.append_row(r);
    return m;
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Generic matrix arithmetic over any ring object exposing add/mul/zero.

template <class Ring>
Matrix<typename Ring::Elem> identity(const Ring& ring, std::size_t n) {
  Matrix<typename Ring::Elem> m(n, n, ring.zero());
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ring.one();
  return m;
}

template <class Ring>
Matrix<typename Ring::Elem> multiply(const Ring& ring, const Matrix<typename Ring::Elem>& a,
                                     const Matrix<typename Ring::Elem>& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product inner dimensions");
  Matrix<typename Ring::Elem> c(a.rows(), b.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (ring.is_zero(a(i, k))) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = ring.add(c(i, j), ring.mul(a(i, k), b(k, j)));
    }
  return c;
}

template <class Ring>
std::vector<typename Ring::Elem> mat_vec(const Ring& ring, const Matrix<typename Ring::Elem>& a,
                                         const std::vector<typename Ring::Elem>& x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector product");
  std::vector<typename Ring::Elem> y(a.rows(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] = ring.add(y[i], ring.mul(a(i, j), x[j]));
  return y;
}

/// Row vector times matrix: x * A.
template <class Ring>
std::vector<typename Ring::Elem> vec_mat(const Ring& ring, const std::vector<typename Ring::Elem>& x,
                                         const Matrix<typename Ring::Elem>& a) {
  if (a.rows() != x.size()) throw DimensionMismatch("vector-matrix product");
  std::vector<typename Ring::Elem> y(a.cols(), ring.zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (ring.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] = ring.add(y[j], ring.mul(x[i], a(i, j)));
  }
  return y;
}

template <class Ring>
std::vector<typename Ring::Elem> scale(const Ring& ring, const typename Ring::Elem& c,
                                       std::vector<typename Ring::Elem> v) {
  for (auto& x : v) x = ring.mul(c, x);
  return v;
}

template <class Ring>
std::vector<typename Ring::Elem> add(const Ring& ring, std::vector<typename Ring::Elem> a,
                                     const std::vector<typename Ring::Elem>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ring.add(a[i], b[i]);
  return a;
}

template <class Ring>
std::vector<typename Ring::Elem> sub(const Ring& ring, std::vector<typename Ring::Elem> a,
                                     const std::vector<typename Ring::Elem>& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = ring.sub(a[i], b[i]);
  return a;
}

template <class Ring>
bool is_zero_vector(const Ring& ring, const std::vector<typename Ring::Elem>& v) {
  for (const auto& x : v)
    if (!ring.is_zero(x)) return false;
  return true;
}

template <class Ring>
Matrix<typename Ring::Elem> scale(const Ring& ring, const typename Ring::Elem& c,
                                  const Matrix<typename Ring::Elem>& m) {
  Matrix<typename Ring::Elem> r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = ring.mul(c, m(i, j));
  return r;
}

}  // namespace rankring
