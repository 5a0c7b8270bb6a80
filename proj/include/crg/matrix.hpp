#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crg/cyclotomic.hpp"
#include "crg/param_poly.hpp"
#include "crg/rational.hpp"

namespace crg {

// Dense row-major matrix. Zero entries are skipped during multiplication,
// which keeps permutation-like operands cheap.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw std::invalid_argument("matrix entry count does not match shape");
  }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<T>& entries() const { return a_; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_));
  }

  Matrix transpose() const {
    if (a_.empty()) return Matrix(cols_, rows_, std::vector<T>{});
    Matrix t(cols_, rows_, a_.front());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  template <class S>
  Matrix& scale(const S& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw std::invalid_argument("matrix product shape mismatch: " + std::to_string(a.rows_) + "x" +
                                  std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                                  std::to_string(b.cols_));
    }
    if (a.a_.empty() || b.a_.empty()) {
      if (a.a_.empty() && b.a_.empty()) return Matrix(a.rows_, b.cols_, std::vector<T>(a.rows_ * b.cols_));
      const T& z = a.a_.empty() ? b.a_.front() : a.a_.front();
      return Matrix(a.rows_, b.cols_, zero_like(z));
    }
    Matrix c(a.rows_, b.cols_, zero_like(a.a_.front()));
    std::vector<std::vector<std::size_t>> nz(b.rows_);
    for (std::size_t k = 0; k < b.rows_; ++k)
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!is_zero(b(k, j))) nz[k].push_back(j);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero(x)) continue;
        for (std::size_t j : nz[k]) c(i, j) += x * b(k, j);
      }
    return c;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      T acc = zero_like(v.empty() ? a_.front() : v.front());
      for (std::size_t j = 0; j < cols_; ++j) {
        const T& x = (*this)(i, j);
        if (!is_zero(x) && !is_zero(v[j])) acc += x * v[j];
      }
      out.push_back(std::move(acc));
    }
    return out;
  }

  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using RationalMatrix = Matrix<Rational>;
using CycMatrix = Matrix<CycNum>;
using ParamMatrix = Matrix<ParamPoly>;

RationalMatrix evaluate(const ParamMatrix& m, const Rational& m0);

template <class T>
std::size_t hash_value(const Matrix<T>& m) {
  std::size_t h = m.rows() * 31 + m.cols();
  for (const auto& x : m.entries()) hash_combine(h, hash_value(x));
  return h;
}

}  // namespace crg
