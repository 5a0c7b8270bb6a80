#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "crg/matrix.hpp"

namespace crg {

// Row-compressed square-or-rectangular matrix; rows hold (column, value)
// pairs sorted by column, with no stored zeros.
template <class T>
class SparseMatrix {
 public:
  using Entry = std::pair<std::size_t, T>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows) {}

  static SparseMatrix identity(std::size_t n, const T& one) {
    SparseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, one);
    return m;
  }

  static SparseMatrix from_dense(const Matrix<T>& d) {
    SparseMatrix m(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
      for (std::size_t j = 0; j < d.cols(); ++j)
        if (!is_zero(d(i, j))) m.rows_[i].emplace_back(j, d(i, j));
    return m;
  }

  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (const auto& r : rows_) n += r.size();
    return n;
  }

  const T* find(std::size_t i, std::size_t j) const {
    const auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it == r.end() || it->first != j) return nullptr;
    return &it->second;
  }

  T get(std::size_t i, std::size_t j, const T& zero) const {
    const T* p = find(i, j);
    return p ? *p : zero;
  }

  // Adds v at (i, j); the entry is dropped if the sum vanishes.
  void add(std::size_t i, std::size_t j, const T& v) {
    if (is_zero(v)) return;
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
    if (it != r.end() && it->first == j) {
      it->second += v;
      if (is_zero(it->second)) r.erase(it);
    } else {
      r.insert(it, Entry(j, v));
    }
  }

  Matrix<T> to_dense(const T& zero) const {
    Matrix<T> d(rows(), cols_, zero);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) d(i, j) = v;
    return d;
  }

  SparseMatrix transpose() const {
    SparseMatrix t(cols_, rows());
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) t.rows_[j].emplace_back(i, v);
    return t;
  }

  template <class S>
  SparseMatrix scaled(const S& s) const {
    SparseMatrix out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) {
        T x = v;
        x *= s;
        if (!is_zero(x)) out.rows_[i].emplace_back(j, std::move(x));
      }
    return out;
  }

  // Restriction to the given row and column index lists (in that order).
  SparseMatrix submatrix(const std::vector<std::size_t>& row_idx, const std::vector<std::size_t>& col_idx) const {
    std::vector<long> pos(cols_, -1);
    for (std::size_t k = 0; k < col_idx.size(); ++k) pos[col_idx[k]] = static_cast<long>(k);
    SparseMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t a = 0; a < row_idx.size(); ++a) {
      for (const auto& [j, v] : rows_[row_idx[a]])
        if (pos[j] >= 0) out.rows_[a].emplace_back(static_cast<std::size_t>(pos[j]), v);
      std::sort(out.rows_[a].begin(), out.rows_[a].end(),
                [](const Entry& x, const Entry& y) { return x.first < y.first; });
    }
    return out;
  }

  bool empty_matrix() const {
    for (const auto& r : rows_)
      if (!r.empty()) return false;
    return true;
  }

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.cols_ == b.cols_ && a.rows_ == b.rows_;
  }

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, false); }
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) { return combine(a, b, true); }

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols_ != b.rows()) throw std::invalid_argument("sparse product shape mismatch");
    SparseMatrix c(a.rows(), b.cols_);
    std::vector<T> acc(b.cols_);
    std::vector<char> used(b.cols_, 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      touched.clear();
      for (const auto& [k, x] : a.rows_[i]) {
        for (const auto& [j, y] : b.rows_[k]) {
          if (!used[j]) {
            used[j] = 1;
            touched.push_back(j);
            acc[j] = x * y;
          } else {
            acc[j] += x * y;
          }
        }
      }
      std::sort(touched.begin(), touched.end());
      for (std::size_t j : touched) {
        used[j] = 0;
        if (!is_zero(acc[j])) c.rows_[i].emplace_back(j, std::move(acc[j]));
      }
    }
    return c;
  }

  // Kronecker product.
  friend SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
    SparseMatrix c(a.rows() * b.rows(), a.cols_ * b.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t k = 0; k < b.rows(); ++k) {
        auto& out = c.rows_[i * b.rows() + k];
        for (const auto& [j, x] : a.rows_[i])
          for (const auto& [l, y] : b.rows_[k]) {
            T v = x * y;
            if (!is_zero(v)) out.emplace_back(j * b.cols_ + l, std::move(v));
          }
      }
    return c;
  }

  template <class F>
  auto map(F f) const -> SparseMatrix<decltype(f(std::declval<const T&>()))> {
    using U = decltype(f(std::declval<const T&>()));
    SparseMatrix<U> out(rows(), cols_);
    for (std::size_t i = 0; i < rows(); ++i)
      for (const auto& [j, v] : rows_[i]) out.add(i, j, f(v));
    return out;
  }

 private:
  static SparseMatrix combine(const SparseMatrix& a, const SparseMatrix& b, bool subtract) {
    if (a.rows() != b.rows() || a.cols_ != b.cols_) throw std::invalid_argument("sparse shape mismatch");
    SparseMatrix c(a.rows(), a.cols_);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      const auto& ra = a.rows_[i];
      const auto& rb = b.rows_[i];
      auto& out = c.rows_[i];
      std::size_t p = 0, q = 0;
      while (p < ra.size() || q < rb.size()) {
        if (q == rb.size() || (p < ra.size() && ra[p].first < rb[q].first)) {
          out.push_back(ra[p++]);
        } else if (p == ra.size() || rb[q].first < ra[p].first) {
          out.emplace_back(rb[q].first, subtract ? -rb[q].second : rb[q].second);
          ++q;
        } else {
          T v = ra[p].second;
          if (subtract) v -= rb[q].second;
          else v += rb[q].second;
          if (!is_zero(v)) out.emplace_back(ra[p].first, std::move(v));
          ++p;
          ++q;
        }
      }
    }
    return c;
  }

  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> rows_;
};

template <class T>
SparseMatrix<Rational> evaluate(const SparseMatrix<T>& m, const Rational& m0) {
  return m.map([&](const T& p) { return Rational(p(m0)); });
}

}  // namespace crg
