#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "arbor/algebra/rings.hpp"
#include "arbor/error.hpp"

namespace arbor::algebra {

// Dense row-major matrix over a ring descriptor R.
template <Ring R>
class Matrix {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;

  Matrix() = default;
  Matrix(R ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols),
        data_(rows * cols, ring_.zero()) {}

  static Matrix identity(R ring, std::size_t n) {
    Matrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.ring_.one();
    return m;
  }

  // Builds from small integer rows; throws kDimensionMismatch if ragged.
  static Matrix from_rows(R ring, const std::vector<std::vector<long long>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(ring, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) {
        throw Error(ErrorKind::kDimensionMismatch, "ragged matrix rows");
      }
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.ring_.from_int(rows[i][j]);
    }
    return m;
  }
  static Matrix from_rows(R ring, std::initializer_list<std::initializer_list<long long>> rows) {
    std::vector<std::vector<long long>> v;
    for (const auto& row : rows) v.emplace_back(row);
    return from_rows(std::move(ring), v);
  }

  const R& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const value_type> entries() const { return data_; }

  bool is_zero() const {
    const value_type z = ring_.zero();
    for (const auto& v : data_) {
      if (!(v == z)) return false;
    }
    return true;
  }

  Matrix transposed() const {
    Matrix t(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  // Entrywise image in another ring.
  template <Ring R2, class F>
  Matrix<R2> map(const R2& target, F&& f) const {
    Matrix<R2> out(target, rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = out.data_[k] + b.data_[k];
    return out;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] = out.data_[k] - b.data_[k];
    return out;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorKind::kDimensionMismatch,
                  "cannot multiply " + a.shape() + " by " + b.shape());
    }
    Matrix out(a.ring_, a.rows_, b.cols_);
    const value_type zero = a.ring_.zero();
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& aik = a(i, k);
        if (aik == zero) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }

  std::string shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) {
      throw Error(ErrorKind::kDimensionMismatch, shape() + " vs " + b.shape());
    }
  }

  R ring_{};
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

using IntMatrix = Matrix<IntegerRing>;

// Row vector times matrix: returns v * m.
template <Ring R>
std::vector<typename R::value_type> row_times(std::span<const typename R::value_type> v,
                                              const Matrix<R>& m) {
  if (v.size() != m.rows()) {
    throw Error(ErrorKind::kDimensionMismatch,
                "vector of length " + std::to_string(v.size()) + " times " + m.shape());
  }
  const auto zero = m.ring().zero();
  std::vector<typename R::value_type> out(m.cols(), zero);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == zero) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
  }
  return out;
}

}  // namespace arbor::algebra
