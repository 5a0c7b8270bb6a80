#include "crg/charpoly.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "crg/linear_algebra.hpp"

namespace crg {
namespace {

constexpr std::size_t kBerkowitzLimit = 64;

bool all_integral(const RationalMatrix& m) {
  for (const auto& x : m.entries())
    if (!is_integral(x)) return false;
  return true;
}

// Coefficients of det(lambda I - A), highest degree first.
template <class S>
std::vector<S> berkowitz(const std::vector<std::vector<S>>& a) {
  const std::size_t n = a.size();
  std::vector<S> c = {S(1), S(-a[0][0])};
  for (std::size_t r = 1; r < n; ++r) {
    // Column of the Toeplitz matrix: 1, -a_rr, -R S, -R M S, ...
    std::vector<S> col;
    col.reserve(r + 2);
    col.emplace_back(1);
    col.push_back(-a[r][r]);
    std::vector<S> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t k = 0; k < r; ++k) {
      S dot = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (sgn(v[i]) != 0 && sgn(a[r][i]) != 0) dot += a[r][i] * v[i];
      col.push_back(-dot);
      if (k + 1 == r) break;
      std::vector<S> w(r, S(0));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
          if (sgn(a[i][j]) != 0 && sgn(v[j]) != 0) w[i] += a[i][j] * v[j];
      v = std::move(w);
    }
    std::vector<S> next(r + 2, S(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (sgn(c[j]) != 0) next[i] += col[i - j] * c[j];
    c = std::move(next);
  }
  return c;
}

ParamPoly sign_adjusted(const std::vector<Rational>& high_first) {
  const std::size_t n = high_first.size() - 1;
  std::vector<Rational> low(high_first.rbegin(), high_first.rend());
  if (n % 2 == 1)
    for (auto& x : low) x = -x;
  return ParamPoly(std::move(low));
}

std::vector<Rational> krylov_minimal_polynomial(const RationalMatrix& a, const std::vector<Rational>& seed) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> seq = {seed};
  for (std::size_t k = 1; k <= n; ++k) {
    seq.push_back(a.apply(seq.back()));
    RationalMatrix cols(n, k + 1, Rational(0));
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t i = 0; i < n; ++i) cols(i, j) = seq[j][i];
    RankKernel<Rational> rk = rank_and_kernel(cols);
    if (rk.kernel.empty()) continue;
    std::vector<Rational> rel = rk.kernel.front();
    Rational lead = rel[k];
    for (auto& x : rel) x /= lead;
    return rel;
  }
  throw std::logic_error("Krylov sequence did not terminate");
}

std::optional<ParamPoly> char_poly_krylov(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> seed(n);
  // Deterministic, non-symmetric seed.
  for (std::size_t i = 0; i < n; ++i) seed[i] = Rational(static_cast<long>((i * 7919 + 13) % 101) + 1);
  ParamPoly mu(krylov_minimal_polynomial(m, seed));
  RootFactorization f = integer_roots(mu);
  if (f.remainder.degree() > 0) return std::nullopt;
  std::vector<std::pair<long, int>> mults;
  std::size_t total = 0;
  for (const auto& [r, mult] : f.factors) {
    RationalMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= r;
    std::size_t geo = n - rank(shifted);
    mults.emplace_back(r, static_cast<int>(geo));
    total += geo;
  }
  // Geometric multiplicities summing to n certify diagonalizability.
  if (total != n) return std::nullopt;
  ParamPoly p(1);
  for (const auto& [r, mult] : mults) p *= (ParamPoly(Rational(r)) - ParamPoly::variable()).pow(static_cast<unsigned>(mult));
  return p;
}

}  // namespace

ParamPoly char_poly_berkowitz(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return ParamPoly(1);
  if (all_integral(m)) {
    std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).get_num();
    std::vector<Integer> c = berkowitz(a);
    std::vector<Rational> q(c.begin(), c.end());
    return sign_adjusted(q);
  }
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  return sign_adjusted(berkowitz(a));
}

ParamPoly char_poly(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("char_poly: matrix must be square");
  if (m.rows() > kBerkowitzLimit) {
    if (auto p = char_poly_krylov(m)) return *p;
  }
  return char_poly_berkowitz(m);
}

ParamPoly RootFactorization::expand() const {
  ParamPoly p = remainder;
  for (const auto& [r, mult] : factors) p *= ParamPoly::linear_factor(Rational(r)).pow(static_cast<unsigned>(mult));
  if (sign < 0) p = -p;
  return p;
}

namespace {

Integer horner(const std::vector<Integer>& c, const Integer& x) {
  Integer acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Exact division of c by (m - r).
std::vector<Integer> deflate(const std::vector<Integer>& c, const Integer& r) {
  const std::size_t n = c.size() - 1;
  std::vector<Integer> q(n);
  Integer carry = 0;
  for (std::size_t k = n; k-- > 0;) {
    carry = c[k + 1] + carry * r;
    q[k] = carry;
  }
  return q;
}

// Upper bound on |root|: 2 * max_k (|a_{n-k}|/|a_n|)^{1/k}, rounded up.
Integer root_bound(const std::vector<Integer>& c) {
  const std::size_t n = c.size() - 1;
  Integer lead = abs(c[n]);
  Integer best = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    const Integer& a = c[n - k];
    if (sgn(a) == 0) continue;
    Integer q = (abs(a) + lead - 1) / lead;
    Integer root;
    mpz_root(root.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(k));
    root += 1;
    if (root > best) best = root;
  }
  return 2 * best;
}

}  // namespace

RootFactorization integer_roots(const ParamPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("integer_roots: zero polynomial");
  RootFactorization out;
  out.sign = sgn(p.leading()) < 0 ? -1 : 1;
  // Primitive integer multiple with positive leading coefficient.
  Integer l = 1;
  for (const auto& x : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> c;
  for (const auto& x : p.coeffs()) c.push_back(x.get_num() * (l / x.get_den()) * out.sign);
  std::size_t zeros = 0;
  while (sgn(c[zeros]) == 0) ++zeros;
  std::vector<std::pair<long, int>> found;
  if (zeros > 0) {
    c.erase(c.begin(), c.begin() + static_cast<long>(zeros));
    found.emplace_back(0, static_cast<int>(zeros));
  }
  if (c.size() > 1) {
    Integer bound = root_bound(c);
    if (!bound.fits_slong_p()) throw std::overflow_error("integer_roots: root bound too large");
    const long b = bound.get_si();
    for (long r = -b; r <= b && c.size() > 1; ++r) {
      if (r == 0) continue;
      Integer rr = r;
      int mult = 0;
      while (c.size() > 1 && mpz_divisible_p(c[0].get_mpz_t(), rr.get_mpz_t()) && sgn(horner(c, rr)) == 0) {
        c = deflate(c, rr);
        ++mult;
      }
      if (mult > 0) found.emplace_back(r, mult);
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
  out.factors = std::move(found);
  // Undo the denominator scaling so that expand() reproduces p.
  std::vector<Rational> rem;
  for (const auto& v : c) rem.push_back(make_rational(v, l));
  out.remainder = ParamPoly(std::move(rem));
  return out;
}

}  // namespace crg
