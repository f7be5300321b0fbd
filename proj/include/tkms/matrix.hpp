#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <optional>
#include <type_traits>
#include <vector>

#include "tkms/numeric.hpp"

namespace tkms {

/// Small dense matrix over any field-like scalar (BigInt, Rational, double,
/// RationalFunction2). Row-major; no dimension is ever large here.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return false;
    for (std::size_t k = 0; k < a_.size(); ++k)
      if (!(a_[k] == o.a_[k])) return false;
    return true;
  }

  Mat operator+(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] + o.a_[k];
    return r;
  }

  Mat operator-(const Mat& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    Mat r(rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] - o.a_[k];
    return r;
  }

  Mat operator*(const Mat& o) const {
    assert(cols_ == o.rows_);
    Mat r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& aik = (*this)(i, k);
        if (aik == T(0)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += aik * o(k, j);
      }
    return r;
  }

  Mat& operator*=(const Mat& o) { return *this = *this * o; }

  Mat submatrix(const std::vector<std::size_t>& ri, const std::vector<std::size_t>& ci) const {
    Mat r(ri.size(), ci.size());
    for (std::size_t i = 0; i < ri.size(); ++i)
      for (std::size_t j = 0; j < ci.size(); ++j) r(i, j) = (*this)(ri[i], ci[j]);
    return r;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) r[i] = (*this)(i, j);
    return r;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

using IntMat = Mat<BigInt>;

template <class T>
std::vector<T> mul_row(const std::vector<T>& v, const Mat<T>& m) {
  assert(v.size() == m.rows());
  std::vector<T> r(m.cols(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (v[i] == T(0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[i] * m(i, j);
  }
  return r;
}

template <class T>
std::vector<T> mul_col(const Mat<T>& m, const std::vector<T>& v) {
  assert(v.size() == m.cols());
  std::vector<T> r(m.rows(), T(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == T(0))) r[i] += m(i, j) * v[j];
  return r;
}

/// Gaussian elimination. Partial pivoting for floating scalars, first nonzero
/// pivot for exact ones. Returns nullopt when singular.
template <class T>
std::optional<std::vector<T>> solve_linear(Mat<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  assert(a.cols() == n && b.size() == n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    if constexpr (std::is_floating_point_v<T>) {
      for (std::size_t i = col + 1; i < n; ++i)
        if (std::fabs(a(i, col)) > std::fabs(a(pivot, col))) pivot = i;
      if (a(pivot, col) == T(0)) return std::nullopt;
    } else {
      while (pivot < n && a(pivot, col) == T(0)) ++pivot;
      if (pivot == n) return std::nullopt;
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a(i, col) == T(0)) continue;
      T f = a(i, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      b[i] -= f * b[col];
    }
  }
  std::vector<T> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a(i, i);
  return x;
}

template <class T>
std::optional<Mat<T>> invert(const Mat<T>& a) {
  const std::size_t n = a.rows();
  assert(a.cols() == n);
  Mat<T> inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<T> e(n, T(0));
    e[j] = T(1);
    auto x = solve_linear(a, e);
    if (!x) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*x)[i];
  }
  return inv;
}

template <class To, class From, class Fn>
Mat<To> mat_cast(const Mat<From>& m, Fn fn) {
  Mat<To> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = fn(m(i, j));
  return r;
}

inline Mat<Rational> to_rational(const IntMat& m) {
  return mat_cast<Rational>(m, [](const BigInt& x) { return Rational(x); });
}

inline Mat<double> to_doubles(const IntMat& m) {
  return mat_cast<double>(m, [](const BigInt& x) { return x.get_d(); });
}

}  // namespace tkms
