#include <random>

#include "crg/charpoly.hpp"
#include "crg/cyclotomic.hpp"
#include "crg/linear_algebra.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace crg;

namespace {

CycNum random_cyc(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(-5, 5);
  std::vector<Rational> c;
  for (int i = 0; i < euler_phi(n); ++i) c.push_back(make_rational(d(rng), (d(rng) % 3 == 0) ? 2 : 1));
  return CycNum(n, c);
}

ParamPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-4, 4);
  std::vector<Rational> c;
  int deg = d(rng) + 4;
  for (int i = 0; i <= deg; ++i) c.push_back(make_rational(d(rng), 3));
  return ParamPoly(c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == ParamPoly({-1, 1}));
  CHECK(cyclotomic_polynomial(4) == ParamPoly({1, 0, 1}));
  CHECK(cyclotomic_polynomial(12) == ParamPoly({1, 0, -1, 0, 1}));
  for (int n = 1; n <= 30; ++n) CHECK(cyclotomic_polynomial(n).degree() == euler_phi(n));
}

TEST_CASE("cyclotomic numbers: roots of unity") {
  for (int n : {1, 2, 3, 4, 5, 7, 8, 12, 15, 20, 24}) {
    CycNum z = CycNum::zeta(n);
    CycNum p = CycNum::one(n);
    for (int k = 0; k < n; ++k) p *= z;
    CHECK(p == CycNum::one(n));
    CHECK(CycNum::zeta(n, n) == CycNum::one(n));
    CHECK(z * z.conj() == CycNum::one(n));
  }
  for (int n : {2, 3, 5, 7, 11, 13}) {
    CycNum s = CycNum::zero(n);
    for (int k = 0; k < n; ++k) s += CycNum::zeta(n, k);
    CHECK(s.is_zero());
  }
}

TEST_CASE("cyclotomic numbers: ring axioms on random triples") {
  std::mt19937 rng(12345);
  for (int n : {3, 4, 5, 8, 12, 24}) {
    for (int trial = 0; trial < 20; ++trial) {
      CycNum a = random_cyc(rng, n), b = random_cyc(rng, n), c = random_cyc(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      CycNum re = CycNum(n, a.coeffs());
      CHECK(re == a);
      if (!a.is_zero()) CHECK(a * a.inverse() == CycNum::one(n));
    }
  }
}

TEST_CASE("cyclotomic numbers: mixed conductors are rejected") {
  CHECK_THROWS_AS(CycNum::zeta(3) + CycNum::zeta(5), std::invalid_argument);
  CHECK_THROWS_AS(CycNum::zeta(3) * CycNum::one(1), std::invalid_argument);
}

TEST_CASE("golden ratio in Q(zeta_5)") {
  CycNum tau = -(CycNum::zeta(5, 2) + CycNum::zeta(5, 3));
  CHECK(tau * tau == tau + CycNum::one(5));
}

TEST_CASE("parameter polynomials: ring axioms and evaluation") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    ParamPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == ParamPoly());
    Rational x = make_rational(trial - 20, 7);
    CHECK((a * b)(x) == a(x) * b(x));
    if (!b.is_zero()) {
      auto [q, r] = a.divmod(b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
  CHECK(ParamPoly().degree() == -1);
}

TEST_CASE("evaluate") {
  ParamPoly m = ParamPoly::variable();
  ParamMatrix d(2, 2, ParamPoly());
  d(0, 0) = m;
  d(1, 1) = m;
  RationalMatrix e = evaluate(d, 3);
  CHECK(e == oracle::int_matrix({{3, 0}, {0, 3}}));
  CHECK((ParamPoly(1) - m)(1) == 0);
  CHECK((m * m - ParamPoly(1))(make_rational(3, 2)) == make_rational(5, 4));
}

TEST_CASE("characteristic polynomial examples") {
  CHECK(char_poly(oracle::int_matrix({{5}})) == ParamPoly({5, -1}));
  RationalMatrix ones = oracle::int_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  CHECK(char_poly(ones) == oracle::from_roots(-1, {{3, 1}, {0, 2}}));
  CHECK(char_poly(oracle::int_matrix({{1, 2}, {2, 1}})) == oracle::from_roots(1, {{3, 1}, {-1, 1}}));
  CHECK_THROWS_AS(char_poly(RationalMatrix(2, 3, Rational(0))), std::invalid_argument);
}

TEST_CASE("characteristic polynomial agrees with Leibniz expansion") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-3, 3);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      RationalMatrix a(n, n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = make_rational(d(rng), trial % 2 ? 2 : 1);
      ParamPoly p = char_poly(a);
      CHECK(p == oracle::leibniz_char_poly(a));
      CHECK(p.degree() == static_cast<long>(n));
      CHECK(p.leading() == (n % 2 ? -1 : 1));
    }
  }
}

TEST_CASE("Krylov route agrees with Berkowitz on a large symmetric matrix") {
  // Block diagonal: 40x40 all-ones plus 30x30 (2 I + all-ones) has
  // eigenvalues 40, 0, 32, 2.
  const std::size_t n = 70;
  RationalMatrix a(n, n, Rational(0));
  for (std::size_t i = 0; i < 40; ++i)
    for (std::size_t j = 0; j < 40; ++j) a(i, j) = 1;
  for (std::size_t i = 40; i < n; ++i)
    for (std::size_t j = 40; j < n; ++j) a(i, j) = (i == j) ? 3 : 1;
  ParamPoly k = char_poly(a);
  CHECK(k == oracle::from_roots(1, {{40, 1}, {32, 1}, {2, 29}, {0, 39}}));
  CHECK(k == char_poly_berkowitz(a));
}

TEST_CASE("eigenvalue multiplicity equals corank for symmetric integer matrices") {
  RationalMatrix a = oracle::int_matrix({{2, 1, 1, 0}, {1, 2, 1, 0}, {1, 1, 2, 0}, {0, 0, 0, 1}});
  RootFactorization f = integer_roots(char_poly(a));
  CHECK(f.remainder == ParamPoly(1));
  for (const auto& [r, mult] : f.factors) {
    RationalMatrix s = a;
    for (std::size_t i = 0; i < 4; ++i) s(i, i) -= r;
    CHECK(static_cast<std::size_t>(mult) == 4 - rank(s));
  }
}

TEST_CASE("integer roots") {
  RootFactorization f = integer_roots(oracle::from_roots(-1, {{0, 2}, {3, 1}}));
  CHECK(f.sign == -1);
  CHECK(f.factors == std::vector<std::pair<long, int>>{{3, 1}, {0, 2}});
  CHECK(f.remainder == ParamPoly(1));

  RootFactorization g = integer_roots(ParamPoly({1, 0, 1}));
  CHECK(g.sign == 1);
  CHECK(g.factors.empty());
  CHECK(g.remainder == ParamPoly({1, 0, 1}));

  ParamPoly h = oracle::from_roots(1, {{13, 1}, {1, 10}, {-2, 4}});
  RootFactorization fh = integer_roots(h);
  CHECK(fh.factors == std::vector<std::pair<long, int>>{{13, 1}, {1, 10}, {-2, 4}});
  CHECK(fh.expand() == h);

  ParamPoly mixed = ParamPoly({1, 0, 1}) * oracle::from_roots(-1, {{-7, 2}, {5, 1}});
  mixed *= make_rational(3, 2);
  RootFactorization fm = integer_roots(mixed);
  CHECK(fm.expand() == mixed);
  CHECK(fm.factors == std::vector<std::pair<long, int>>{{5, 1}, {-7, 2}});
  CHECK(fm.remainder.degree() == 2);
  CHECK_THROWS_AS(integer_roots(ParamPoly()), std::invalid_argument);
}

TEST_CASE("rank and kernel") {
  RankKernel<Rational> id = rank_and_kernel(RationalMatrix::identity(3, 0, 1));
  CHECK(id.rank == 3);
  CHECK(id.kernel.empty());
  RationalMatrix ones = oracle::int_matrix({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  RankKernel<Rational> rk = rank_and_kernel(ones);
  CHECK(rk.rank == 1);
  CHECK(rk.kernel.size() == 2);
  for (const auto& v : rk.kernel) {
    for (const auto& x : ones.apply(v)) CHECK(x == 0);
  }
  CHECK(rank(ones) == 1);

  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t r = 2 + trial % 5, c = 3 + trial % 4;
    RationalMatrix a(r, c, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) a(i, j) = make_rational(d(rng), 1 + trial % 3);
    RankKernel<Rational> k = rank_and_kernel(a);
    CHECK(k.rank + k.kernel.size() == c);
    CHECK(k.rank == rank(a));
    for (const auto& v : k.kernel)
      for (const auto& x : a.apply(v)) CHECK(x == 0);
  }
}

TEST_CASE("rank and kernel over a cyclotomic field") {
  CycNum z = CycNum::zeta(5);
  CycMatrix a(2, 3, CycNum::zero(5));
  a(0, 0) = CycNum::one(5);
  a(0, 1) = z;
  a(1, 0) = z;
  a(1, 1) = z * z;
  a(1, 2) = CycNum::one(5);
  RankKernel<CycNum> k = rank_and_kernel(a);
  CHECK(k.rank == 2);
  REQUIRE(k.kernel.size() == 1);
  for (const auto& x : a.apply(k.kernel[0])) CHECK(x.is_zero());
}

TEST_CASE("matrix product shape is enforced") {
  CHECK_THROWS_AS(RationalMatrix(2, 3, Rational(0)) * RationalMatrix(2, 3, Rational(0)), std::invalid_argument);
}
