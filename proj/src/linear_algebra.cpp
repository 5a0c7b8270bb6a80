#include "crg/linear_algebra.hpp"

#include <stdexcept>
#include <utility>

namespace crg {
namespace {

using IntRow = std::vector<Integer>;

// Scales a rational row to a primitive integer row (sign untouched).
IntRow primitive_row(const std::vector<Rational>& row) {
  Integer l = 1;
  for (const auto& x : row)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntRow out;
  out.reserve(row.size());
  Integer g = 0;
  for (const auto& x : row) {
    Integer v = x.get_num() * (l / x.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (g > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  return out;
}

void make_primitive(IntRow& row) {
  Integer g = 0;
  for (const auto& v : row) {
    if (sgn(v) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

struct IntEchelon {
  std::vector<IntRow> rows;
  std::vector<std::size_t> pivots;
};

// Fully reduced echelon form over Z: each pivot column is zero outside its
// pivot row, rows kept primitive with positive pivot.
IntEchelon integer_echelon(const RationalMatrix& m) {
  std::vector<IntRow> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(primitive_row(m.row(i)));
  IntEchelon e;
  std::size_t r = 0;
  const std::size_t n = m.cols();
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t best = rows.size();
    for (std::size_t i = r; i < rows.size(); ++i) {
      if (sgn(rows[i][c]) == 0) continue;
      if (best == rows.size() || mpz_cmpabs(rows[i][c].get_mpz_t(), rows[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == rows.size()) continue;
    std::swap(rows[r], rows[best]);
    if (sgn(rows[r][c]) < 0)
      for (auto& v : rows[r]) v = -v;
    const Integer piv = rows[r][c];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Integer g;
      mpz_gcd(g.get_mpz_t(), piv.get_mpz_t(), rows[i][c].get_mpz_t());
      Integer a = piv / g;
      Integer b = rows[i][c] / g;
      for (std::size_t j = 0; j < n; ++j) rows[i][j] = a * rows[i][j] - b * rows[r][j];
      make_primitive(rows[i]);
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

template <class T>
Echelon<T> field_echelon(const Matrix<T>& m) {
  std::vector<std::vector<T>> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  Echelon<T> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && is_zero(rows[p][c])) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    T inv = inverse(rows[r][c]);
    for (auto& v : rows[r]) v = v * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || is_zero(rows[i][c])) continue;
      T f = rows[i][c];
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(rows[r][j])) rows[i][j] -= f * rows[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  e.rows = std::move(rows);
  return e;
}

template <class T>
std::vector<std::vector<T>> kernel_from_echelon(const Echelon<T>& e, std::size_t cols, const T& zero, const T& one) {
  std::vector<char> is_pivot(cols, 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  std::vector<std::vector<T>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<T> v(cols, zero);
    v[f] = one;
    for (std::size_t k = 0; k < e.pivots.size(); ++k) v[e.pivots[k]] = -e.rows[k][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace

Echelon<Rational> reduced_echelon(const RationalMatrix& m) {
  IntEchelon ie = integer_echelon(m);
  Echelon<Rational> e;
  e.pivots = ie.pivots;
  for (std::size_t k = 0; k < ie.rows.size(); ++k) {
    const Integer& piv = ie.rows[k][ie.pivots[k]];
    std::vector<Rational> row;
    row.reserve(m.cols());
    for (const auto& v : ie.rows[k]) row.push_back(make_rational(v, piv));
    e.rows.push_back(std::move(row));
  }
  return e;
}

Echelon<CycNum> reduced_echelon(const CycMatrix& m) { return field_echelon(m); }

RankKernel<Rational> rank_and_kernel(const RationalMatrix& m) {
  Echelon<Rational> e = reduced_echelon(m);
  RankKernel<Rational> out;
  out.rank = e.pivots.size();
  out.kernel = kernel_from_echelon<Rational>(e, m.cols(), Rational(0), Rational(1));
  return out;
}

RankKernel<CycNum> rank_and_kernel(const CycMatrix& m) {
  Echelon<CycNum> e = field_echelon(m);
  RankKernel<CycNum> out;
  out.rank = e.pivots.size();
  if (m.rows() > 0 && m.cols() > 0) {
    const int n = m(0, 0).conductor();
    out.kernel = kernel_from_echelon<CycNum>(e, m.cols(), CycNum::zero(n), CycNum::one(n));
  }
  return out;
}

namespace {

// Bareiss elimination on an integer copy; returns rank and records the
// successive pivots (leading principal minors when no swaps occur).
std::size_t bareiss_rank(std::vector<IntRow> a, std::size_t cols) {
  std::size_t r = 0;
  Integer prev = 1;
  const std::size_t nrows = a.size();
  for (std::size_t c = 0; c < cols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && sgn(a[p][c]) == 0) ++p;
    if (p == nrows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < nrows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  std::vector<IntRow> a;
  a.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(primitive_row(m.row(i)));
  return bareiss_rank(std::move(a), m.cols());
}

std::size_t rank(const CycMatrix& m) { return field_echelon(m).pivots.size(); }

std::vector<Rational> leading_principal_minors(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("leading_principal_minors: matrix must be square");
  const std::size_t n = m.rows();
  // Common denominator so that the elimination stays integral.
  Integer l = 1;
  for (const auto& x : m.entries()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<IntRow> a(n, IntRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  std::vector<Rational> minors;
  Integer prev = 1;
  Integer scale = 1;
  for (std::size_t k = 0; k < n; ++k) {
    scale *= l;
    minors.push_back(make_rational(a[k][k], scale));
    if (sgn(a[k][k]) == 0) {
      // Without pivoting the remaining minors are not produced by Bareiss.
      break;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a[k][k] * a[i][j] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return minors;
}

}  // namespace crg
