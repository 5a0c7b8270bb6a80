#include "crg/algebra_span.hpp"

#include "crg/linear_algebra.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <stdexcept>

namespace crg {
namespace {

constexpr std::uint64_t kPrime = kSpanPrime;  // 2^31 - 1

std::size_t check_shapes(const std::vector<RationalMatrix>& mats) {
  if (mats.empty()) throw std::invalid_argument("algebra_dimension needs at least one matrix");
  const std::size_t n = mats.front().rows();
  for (const auto& m : mats)
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("algebra_dimension: matrices must be n x n");
  return n;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1U) r = r * b % p;
    b = b * b % p;
    e >>= 1U;
  }
  return r;
}

std::optional<std::uint64_t> reduce_mod(const Rational& x, std::uint64_t p) {
  Integer pp = static_cast<unsigned long>(p);
  Integer num = x.get_num() % pp;
  if (num < 0) num += pp;
  Integer den = x.get_den() % pp;
  if (den == 0) return std::nullopt;
  std::uint64_t d = den.get_ui();
  return num.get_ui() * pow_mod(d, p - 2, p) % p;
}

inline std::uint64_t mod_reduce(std::uint64_t x, std::uint64_t p) {
  if (p == kPrime) {
    x = (x & kPrime) + (x >> 31);
    x = (x & kPrime) + (x >> 31);
    return x >= kPrime ? x - kPrime : x;
  }
  return x % p;
}

using ModVec = std::vector<std::uint64_t>;

struct ModEchelon {
  std::uint64_t p;
  std::vector<ModVec> rows;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots;
  // Set when the span is known to be the whole ambient space.
  std::size_t full_dimension = 0;

  std::size_t dimension() const { return full_dimension ? full_dimension : rows.size(); }

  // Returns true when v is independent (and adds it).
  bool insert(ModVec v) {
    if (full_dimension) return false;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      std::uint64_t c = v[pivots[k]];
      if (c == 0) continue;
      const ModVec& b = rows[k];
      std::uint64_t neg = p - c;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (b[j]) v[j] = mod_reduce(v[j] + neg * b[j], p);
    }
    std::size_t piv = 0;
    while (piv < v.size() && v[piv] == 0) ++piv;
    if (piv == v.size()) return false;
    std::uint64_t inv = pow_mod(v[piv], p - 2, p);
    for (auto& x : v) x = mod_reduce(x * inv, p);
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

ModVec mod_mul(const ModVec& a, const ModVec& b, std::size_t n, std::uint64_t p) {
  ModVec c(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      std::uint64_t x = a[i * n + k];
      if (!x) continue;
      for (std::size_t j = 0; j < n; ++j) {
        std::uint64_t y = b[k * n + j];
        if (y) c[i * n + j] = mod_reduce(c[i * n + j] + x * y, p);
      }
    }
  return c;
}

using IntVec = std::vector<Integer>;

struct IntEchelonSpan {
  std::vector<IntVec> rows;
  std::vector<std::size_t> pivots;

  static void make_primitive(IntVec& v) {
    Integer g = 0;
    for (const auto& x : v) {
      if (sgn(x) == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  }

  bool insert(IntVec v) {
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Integer& c = v[pivots[k]];
      if (sgn(c) == 0) continue;
      const IntVec& b = rows[k];
      const Integer& bp = b[pivots[k]];
      Integer g;
      mpz_gcd(g.get_mpz_t(), c.get_mpz_t(), bp.get_mpz_t());
      Integer fa = bp / g, fb = c / g;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (sgn(b[j]) == 0) {
          if (sgn(v[j]) != 0) v[j] *= fa;
        } else {
          v[j] = fa * v[j] - fb * b[j];
        }
      }
      make_primitive(v);
    }
    std::size_t piv = 0;
    while (piv < v.size() && sgn(v[piv]) == 0) ++piv;
    if (piv == v.size()) return false;
    rows.push_back(std::move(v));
    pivots.push_back(piv);
    return true;
  }
};

IntVec to_int_vec(const std::vector<Rational>& flat) {
  Integer l = 1;
  for (const auto& x : flat) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  IntVec v;
  v.reserve(flat.size());
  for (const auto& x : flat) v.push_back(x.get_num() * (l / x.get_den()));
  IntEchelonSpan::make_primitive(v);
  return v;
}


// Polynomials over F_p, lowest degree first, no trailing zeros.
using ModPoly = std::vector<std::uint64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly poly_rem(ModPoly a, const ModPoly& f, std::uint64_t p) {
  trim(a);
  const std::uint64_t lead_inv = pow_mod(f.back(), p - 2, p);
  while (a.size() >= f.size()) {
    const std::uint64_t c = mod_reduce(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - f.size();
    for (std::size_t i = 0; i < f.size(); ++i) a[shift + i] = mod_reduce(a[shift + i] + (p - c) * f[i], p);
    trim(a);
  }
  return a;
}

ModPoly poly_mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = mod_reduce(c[i + j] + a[i] * b[j], p);
  return poly_rem(std::move(c), f, p);
}

ModPoly poly_powmod(ModPoly base, std::uint64_t e, const ModPoly& f, std::uint64_t p) {
  ModPoly r = {1};
  base = poly_rem(std::move(base), f, p);
  while (e) {
    if (e & 1U) r = poly_mulmod(r, base, f, p);
    base = poly_mulmod(base, base, f, p);
    e >>= 1U;
  }
  return r;
}

ModPoly poly_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

ModPoly poly_sub_x(ModPoly a, std::uint64_t shift, std::uint64_t p) {
  // a - (x + shift) when shift < p, used for x^p - x and (x+a)^k - 1 forms.
  if (a.size() < 2) a.resize(2, 0);
  a[1] = mod_reduce(a[1] + p - 1, p);
  a[0] = mod_reduce(a[0] + p - shift, p);
  trim(a);
  return a;
}

// det(x I - a) via reduction to Hessenberg form.
ModPoly char_poly_mod(ModVec a, std::size_t n, std::uint64_t p) {
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * n + j]; };
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t piv = j + 1;
    while (piv < n && at(piv, j) == 0) ++piv;
    if (piv == n) continue;
    if (piv != j + 1) {
      for (std::size_t k = 0; k < n; ++k) std::swap(at(piv, k), at(j + 1, k));
      for (std::size_t k = 0; k < n; ++k) std::swap(at(k, piv), at(k, j + 1));
    }
    const std::uint64_t inv = pow_mod(at(j + 1, j), p - 2, p);
    for (std::size_t i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const std::uint64_t u = mod_reduce(at(i, j) * inv, p);
      for (std::size_t k = 0; k < n; ++k) at(i, k) = mod_reduce(at(i, k) + (p - u) * at(j + 1, k), p);
      for (std::size_t k = 0; k < n; ++k) at(k, j + 1) = mod_reduce(at(k, j + 1) + u * at(k, i), p);
    }
  }
  std::vector<ModPoly> q(n + 1);
  q[0] = {1};
  for (std::size_t k = 0; k < n; ++k) {
    ModPoly next(k + 2, 0);
    for (std::size_t i = 0; i < q[k].size(); ++i) {
      next[i + 1] = mod_reduce(next[i + 1] + q[k][i], p);
      next[i] = mod_reduce(next[i] + (p - at(k, k)) * q[k][i], p);
    }
    std::uint64_t prod = 1;
    for (std::size_t i = k; i-- > 0;) {
      prod = mod_reduce(prod * at(i + 1, i), p);
      const std::uint64_t c = mod_reduce(at(i, k) * prod, p);
      if (c == 0) continue;
      for (std::size_t l = 0; l < q[i].size(); ++l) next[l] = mod_reduce(next[l] + (p - c) * q[i][l], p);
    }
    q[k + 1] = std::move(next);
  }
  return q[n];
}

std::optional<std::uint64_t> find_root(const ModPoly& f, std::uint64_t p, std::mt19937_64& rng) {
  ModPoly h = poly_gcd(f, poly_sub_x(poly_powmod({0, 1}, p, f, p), 0, p), p);
  if (h.size() < 2) return std::nullopt;
  std::uniform_int_distribution<std::uint64_t> pick(0, p - 1);
  for (int guard = 0; h.size() > 2 && guard < 200; ++guard) {
    ModPoly w = poly_powmod({pick(rng), 1}, (p - 1) / 2, h, p);
    if (w.empty()) continue;
    w[0] = mod_reduce(w[0] + p - 1, p);
    trim(w);
    ModPoly d = poly_gcd(h, w, p);
    if (d.size() >= 2 && d.size() < h.size()) h = std::move(d);
  }
  if (h.size() != 2) return std::nullopt;
  return mod_reduce((p - h[0]) * pow_mod(h[1], p - 2, p), p);
}

ModVec mat_vec(const ModVec& a, const ModVec& v, std::size_t n, std::uint64_t p, bool transpose) {
  ModVec out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t x = transpose ? a[j * n + i] : a[i * n + j];
      if (x && v[j]) out[i] = mod_reduce(out[i] + x * v[j], p);
    }
  return out;
}

bool spins_to_everything(const std::vector<ModVec>& gens, ModVec v, std::size_t n, std::uint64_t p, bool transpose) {
  ModEchelon span{p, {}, {}};
  std::deque<ModVec> queue;
  if (!span.insert(v)) return false;
  queue.push_back(std::move(v));
  while (!queue.empty() && span.rows.size() < n) {
    ModVec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ModVec y = mat_vec(g, x, n, p, transpose);
      if (span.insert(y)) queue.push_back(std::move(y));
    }
  }
  return span.rows.size() == n;
}

// Certifies that the generated algebra is all of M_n(F_p): a random element
// with a simple eigenvalue l yields the rank-one element g(X), g = chi/(x-l),
// whose image and coimage must each spin up to the whole space.
bool full_by_rank_one(const std::vector<ModVec>& gens, std::size_t n, std::uint64_t p) {
  if (n <= 1) return true;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::uint64_t> pick(1, p - 1);
  std::uniform_int_distribution<std::size_t> which(0, gens.size() - 1);
  for (int attempt = 0; attempt < 8; ++attempt) {
    ModVec x(n * n, 0);
    for (const auto& g : gens) {
      const std::uint64_t c = pick(rng);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = mod_reduce(x[k] + c * g[k], p);
    }
    for (int k = 0; k < 2; ++k) {
      ModVec prod = mod_mul(gens[which(rng)], gens[which(rng)], n, p);
      const std::uint64_t c = pick(rng);
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = mod_reduce(x[i] + c * prod[i], p);
    }
    ModPoly chi = char_poly_mod(x, n, p);
    auto lambda = find_root(chi, p, rng);
    if (!lambda) continue;
    // g = chi / (x - lambda) by synthetic division; lambda is simple iff g(lambda) != 0.
    ModPoly g(n, 0);
    std::uint64_t carry = chi[n];
    for (std::size_t i = n; i-- > 0;) {
      g[i] = carry;
      carry = mod_reduce(chi[i] + carry * *lambda, p);
    }
    std::uint64_t at_lambda = 0;
    for (std::size_t i = n; i-- > 0;) at_lambda = mod_reduce(at_lambda * *lambda + g[i], p);
    if (at_lambda == 0) continue;
    auto apply_g = [&](bool transpose) {
      ModVec r(n);
      for (auto& e : r) e = pick(rng);
      ModVec acc(n, 0);
      for (std::size_t i = n; i-- > 0;) {
        acc = mat_vec(x, acc, n, p, transpose);
        for (std::size_t k = 0; k < n; ++k) acc[k] = mod_reduce(acc[k] + g[i] * r[k], p);
      }
      return acc;
    };
    ModVec v = apply_g(false), w = apply_g(true);
    if (std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; }) ||
        std::all_of(w.begin(), w.end(), [](auto e) { return e == 0; }))
      continue;
    return spins_to_everything(gens, v, n, p, false) && spins_to_everything(gens, w, n, p, true);
  }
  return false;
}
}  // namespace

namespace {

std::optional<ModVec> reduce_matrix(const RationalMatrix& m, std::uint64_t p) {
  ModVec v;
  v.reserve(m.rows() * m.cols());
  for (const auto& x : m.entries()) {
    auto r = reduce_mod(x, p);
    if (!r) return std::nullopt;
    v.push_back(*r);
  }
  return v;
}

std::optional<ModEchelon> mod_p_span(const std::vector<RationalMatrix>& mats, std::uint64_t p) {
  const std::size_t n = check_shapes(mats);
  std::vector<ModVec> gens;
  for (const auto& m : mats) {
    auto v = reduce_matrix(m, p);
    if (!v) return std::nullopt;
    gens.push_back(std::move(*v));
  }
  ModEchelon span{p, {}, {}};
  ModVec id(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  if (n > 8 && full_by_rank_one(gens, n, p)) {
    span.full_dimension = n * n;
    return span;
  }
  std::deque<ModVec> queue;
  span.insert(id);
  queue.push_back(id);
  while (!queue.empty() && span.rows.size() < n * n) {
    ModVec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ModVec y = mod_mul(x, g, n, p);
      if (span.insert(y)) queue.push_back(std::move(y));
      if (span.rows.size() == n * n) break;
    }
  }
  return span;
}

}  // namespace

std::optional<std::size_t> algebra_dimension_mod_p(const std::vector<RationalMatrix>& mats, std::uint64_t p) {
  auto span = mod_p_span(mats, p);
  if (!span) return std::nullopt;
  return span->dimension();
}

std::optional<bool> algebra_contains_mod_p(const std::vector<RationalMatrix>& mats, const RationalMatrix& target,
                                           std::uint64_t p) {
  auto span = mod_p_span(mats, p);
  if (!span) return std::nullopt;
  auto v = reduce_matrix(target, p);
  if (!v) return std::nullopt;
  return !span->insert(std::move(*v));
}

bool algebra_contains_exact(const std::vector<RationalMatrix>& mats, const RationalMatrix& target) {
  IntEchelonSpan span;
  for (const auto& b : algebra_basis_exact(mats)) span.insert(to_int_vec(b));
  return !span.insert(to_int_vec(target.entries()));
}

namespace {

// Generators given block by block; an element is the concatenation of its
// flattened blocks.
std::optional<ModEchelon> mod_p_block_span(const std::vector<std::vector<RationalMatrix>>& gens_blocks,
                                           std::uint64_t p, std::size_t& full) {
  if (gens_blocks.empty()) throw std::invalid_argument("block algebra needs a generator");
  std::vector<std::size_t> sizes, offsets;
  full = 0;
  for (const auto& b : gens_blocks.front()) {
    sizes.push_back(b.rows());
    offsets.push_back(full);
    full += b.rows() * b.rows();
  }
  std::vector<std::vector<ModVec>> gens;
  for (const auto& g : gens_blocks) {
    if (g.size() != sizes.size()) throw std::invalid_argument("block algebra: inconsistent block counts");
    std::vector<ModVec> blocks;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (g[k].rows() != sizes[k] || g[k].cols() != sizes[k]) throw std::invalid_argument("block algebra: bad block");
      auto v = reduce_matrix(g[k], p);
      if (!v) return std::nullopt;
      blocks.push_back(std::move(*v));
    }
    gens.push_back(std::move(blocks));
  }
  auto multiply = [&](const ModVec& x, const std::vector<ModVec>& g) {
    ModVec y(full, 0);
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      ModVec xb(x.begin() + static_cast<long>(offsets[k]),
                x.begin() + static_cast<long>(offsets[k] + sizes[k] * sizes[k]));
      ModVec yb = mod_mul(xb, g[k], sizes[k], p);
      std::copy(yb.begin(), yb.end(), y.begin() + static_cast<long>(offsets[k]));
    }
    return y;
  };
  ModEchelon span{p, {}, {}};
  ModVec id(full, 0);
  for (std::size_t k = 0; k < sizes.size(); ++k)
    for (std::size_t i = 0; i < sizes[k]; ++i) id[offsets[k] + i * sizes[k] + i] = 1;
  std::deque<ModVec> queue;
  span.insert(id);
  queue.push_back(id);
  while (!queue.empty() && span.rows.size() < full) {
    ModVec x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens) {
      ModVec y = multiply(x, g);
      if (span.insert(y)) queue.push_back(std::move(y));
      if (span.rows.size() == full) break;
    }
  }
  return span;
}

}  // namespace

std::optional<bool> block_algebra_contains_mod_p(const std::vector<std::vector<RationalMatrix>>& gens_blocks,
                                                 const std::vector<RationalMatrix>& target, std::uint64_t p) {
  std::size_t full = 0;
  auto span = mod_p_block_span(gens_blocks, p, full);
  if (!span) return std::nullopt;
  ModVec v;
  for (const auto& b : target) {
    auto r = reduce_matrix(b, p);
    if (!r) return std::nullopt;
    v.insert(v.end(), r->begin(), r->end());
  }
  if (v.size() != full) throw std::invalid_argument("block algebra: target shape mismatch");
  return !span->insert(std::move(v));
}

std::vector<std::vector<Rational>> algebra_basis_exact(const std::vector<RationalMatrix>& mats) {
  const std::size_t n = check_shapes(mats);
  IntEchelonSpan span;
  std::vector<std::vector<Rational>> basis;
  std::deque<RationalMatrix> queue;
  RationalMatrix id = RationalMatrix::identity(n, 0, 1);
  span.insert(to_int_vec(id.entries()));
  basis.push_back(id.entries());
  queue.push_back(id);
  while (!queue.empty() && basis.size() < n * n) {
    RationalMatrix x = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : mats) {
      RationalMatrix y = x * g;
      if (span.insert(to_int_vec(y.entries()))) {
        basis.push_back(y.entries());
        queue.push_back(std::move(y));
      }
      if (basis.size() == n * n) break;
    }
  }
  return basis;
}

std::size_t algebra_dimension_exact(const std::vector<RationalMatrix>& mats) {
  return algebra_basis_exact(mats).size();
}

std::size_t algebra_dimension(const std::vector<RationalMatrix>& mats) {
  const std::size_t n = check_shapes(mats);
  if (auto d = algebra_dimension_mod_p(mats, kPrime); d && *d == n * n) return *d;
  return algebra_dimension_exact(mats);
}

bool is_proper_invariant_subspace(const std::vector<RationalMatrix>& mats,
                                  const std::vector<std::vector<Rational>>& basis) {
  const std::size_t n = check_shapes(mats);
  if (basis.empty()) return false;
  RationalMatrix ext(basis.size() + 1, n, Rational(0));
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].size() != n) throw std::invalid_argument("invariant subspace: vector length does not match");
    for (std::size_t j = 0; j < n; ++j) ext(i, j) = basis[i][j];
  }
  const std::size_t k = rank(ext);
  if (k == 0 || k == n) return false;
  for (const auto& m : mats)
    for (const auto& v : basis) {
      std::vector<Rational> w = m.apply(v);
      for (std::size_t j = 0; j < n; ++j) ext(basis.size(), j) = w[j];
      if (rank(ext) != k) return false;
    }
  return true;
}

}  // namespace crg
