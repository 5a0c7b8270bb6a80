#include "crg/algebra_span.hpp"
#include "crg/infinitesimal_rep.hpp"
#include "crg/quadratic_form.hpp"
#include "doctest.h"

using namespace crg;

namespace {

using GroupPtr = std::shared_ptr<const ReflectionGroupData>;

GroupPtr share(ReflectionGroupData g) { return std::make_shared<const ReflectionGroupData>(std::move(g)); }

// t_s v_u = v_{sus} - alpha(s,u) v_s for u != s, t_s v_s = m v_s, written out densely.
RationalMatrix oracle_t(const ReflectionGroupData& g, std::size_t s, const Rational& m0) {
  const std::size_t n = g.size();
  RationalMatrix t(n, n, Rational(0));
  for (std::size_t u = 0; u < n; ++u) {
    if (u == s) {
      t(s, s) += m0;
      continue;
    }
    long a = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (g.reflections[y].element * g.reflections[u].element * g.reflections[y].element == g.reflections[s].element)
        ++a;
    std::size_t sus = g.conj_table[s][u];
    t(sus, u) += 1;
    t(s, u) -= a;
  }
  return t;
}

bool is_sound(const ReflectionGroupData& g) {
  SymbolicRep rep = build_rep(g);
  return check_integrability(rep).passed && check_equivariance(rep).passed;
}

}  // namespace

TEST_CASE("t_s matches the defining formula") {
  for (auto g : {build_coxeter(CoxeterType::A, 2), build_coxeter(CoxeterType::B, 3), build_series(4, 2, 2),
                 build_coxeter(CoxeterType::I2, 5)}) {
    SampledRep rep = build_rep_at(share(g), Rational(7, 3));
    for (std::size_t s = 0; s < g.size(); ++s) CHECK(rep.t_mats[s].to_dense(0) == oracle_t(g, s, Rational(7, 3)));
  }
}

TEST_CASE("sampled and evaluated symbolic representations agree") {
  GroupPtr g = share(build_coxeter(CoxeterType::H3));
  SymbolicRep sym = build_rep(g);
  for (const Rational& m0 : {Rational(7), Rational(22, 7), Rational(-5, 2)}) {
    SampledRep a = build_rep_at(g, m0), b = evaluate(sym, m0);
    for (std::size_t s = 0; s < g->size(); ++s) {
      CHECK(a.t_mats[s] == b.t_mats[s]);
      CHECK(a.p_mats[s] == b.p_mats[s]);
      CHECK(a.s_mats[s] == b.s_mats[s]);
    }
  }
}

TEST_CASE("small examples") {
  SymbolicRep rank1 = build_rep(build_series(2, 1, 1));
  REQUIRE(rank1.t_mats.size() == 1);
  CHECK(rank1.t_mats[0].get(0, 0, ParamPoly()) == ParamPoly::variable());
  CHECK(check_integrability(rank1).passed);
  CHECK(dual_check(rank1).passed);

  ReflectionGroupData a2 = build_coxeter(CoxeterType::A, 2);
  SampledRep r = build_rep_at(share(a2), Rational(5));
  RationalMatrix t0 = r.t_mats[0].to_dense(0);
  CHECK(t0(0, 0) == 5);
  CHECK(t0(1, 1) == 0);
  CHECK(t0(2, 2) == 0);
  CHECK_FALSE(t0 == t0.transpose());
  CHECK(dual_check(r).passed);
}

TEST_CASE("integrability and equivariance hold symbolically") {
  for (auto g : {build_coxeter(CoxeterType::A, 3), build_coxeter(CoxeterType::B, 3), build_series(3, 3, 3),
                 build_series(6, 3, 2), build_coxeter(CoxeterType::D, 4), build_coxeter(CoxeterType::H3)}) {
    CAPTURE(g.name);
    SymbolicRep rep = build_rep(g);
    CHECK(check_integrability(rep).passed);
    CHECK(check_equivariance(rep).passed);
    CHECK(check_rep_identities(rep).passed);
    CHECK(dual_check(rep).passed);
    for (std::size_t c = 0; c < g.classes.size(); ++c) CHECK(check_T_scalar(rep, c).passed);
  }
}

TEST_CASE("sampled equivariance on a large group") {
  SampledRep rep = build_rep_at(share(build_coxeter(CoxeterType::E7)), Rational(22, 7));
  CheckResult r = check_equivariance(rep, 60, 200);
  CHECK(r.passed);
}

TEST_CASE("T acts by m - 1 + C(c)") {
  ReflectionGroupData a2 = build_coxeter(CoxeterType::A, 2);
  CHECK(class_stats(a2, 0).c == 1);
  ReflectionGroupData b2 = build_series(2, 1, 2);
  for (std::size_t c = 0; c < b2.classes.size(); ++c) CHECK(class_stats(b2, c).c == 2);
  // Direct sum at a sample value.
  for (auto g : {a2, b2, build_coxeter(CoxeterType::B, 3)}) {
    SampledRep rep = build_rep_at(share(g), Rational(9, 4));
    for (std::size_t c = 0; c < g.classes.size(); ++c) {
      SparseMatrix<Rational> total(g.size(), g.size());
      for (const auto& t : rep.t_mats) total = total + t;
      RationalMatrix block = restrict_to_class(rep, total, c).to_dense(0);
      Rational scalar = Rational(9, 4) - 1 + class_stats(g, c).c;
      CHECK(block == RationalMatrix::identity(g.classes[c].size(), Rational(0), scalar));
    }
  }
}

TEST_CASE("mutating one alpha entry breaks the representation") {
  for (auto base : {build_coxeter(CoxeterType::A, 2), build_series(2, 1, 2)}) {
    CAPTURE(base.name);
    REQUIRE(is_sound(base));
    for (std::size_t s = 0; s < base.size(); ++s)
      for (std::size_t u = 0; u < base.size(); ++u) {
        if (s == u) continue;
        ReflectionGroupData g = base;
        g.alpha_table[s][u] += 1;
        CAPTURE(s);
        CAPTURE(u);
        CHECK_FALSE(is_sound(g));
      }
  }
}

TEST_CASE("spectra") {
  SymbolicRep a2 = build_rep(build_coxeter(CoxeterType::A, 2));
  CHECK(spectrum_check(a2, 0, Rational(5)).passed);
  CHECK_THROWS_AS(spectrum_check(a2, 0, Rational(1)), std::invalid_argument);
  ReflectionGroupData b2 = build_series(2, 1, 2);
  SymbolicRep rb2 = build_rep(b2);
  for (std::size_t s = 0; s < b2.size(); ++s) {
    CHECK(spectrum_check(rb2, s, Rational(5)).passed);
    CHECK(spectrum_check(rb2, s, Rational(-1)).passed);
  }
  ReflectionGroupData d4 = build_coxeter(CoxeterType::D, 4);
  SymbolicRep rd4 = build_rep(d4);
  CHECK(spectrum_check(rd4, 0, Rational(5)).passed);
  CHECK(spectrum_check(rd4, 3, Rational(-7, 2)).passed);
}

TEST_CASE("parabolic restriction") {
  ReflectionGroupData b3 = build_coxeter(CoxeterType::B, 3);
  SymbolicRep rb3 = build_rep(b3);
  std::size_t found = 0;
  for (std::size_t s = 0; s < b3.size() && !found; ++s)
    for (std::size_t u = 0; u < b3.size(); ++u) {
      if (b3.commute(s, u) || b3.class_of[s] != b3.class_of[u]) continue;
      if (b3.classes[b3.class_of[s]].size() != 6) continue;
      auto r0 = parabolic_reflections(b3, {s, u});
      if (r0.size() != 3) continue;
      CHECK(parabolic_restriction_check(rb3, {s, u}).passed);
      ++found;
      break;
    }
  CHECK(found == 1);

  ReflectionGroupData a3 = build_coxeter(CoxeterType::A, 3);
  SymbolicRep ra3 = build_rep(a3);
  CHECK(parabolic_restriction_check(ra3, {0}).passed);
  for (std::size_t u = 1; u < a3.size(); ++u)
    if (a3.commute(0, u)) CHECK(parabolic_restriction_check(ra3, {0, u}).passed);
  CHECK_THROWS(parabolic_restriction_check(ra3, {}));
}

TEST_CASE("algebra dimension") {
  ReflectionGroupData i5 = build_coxeter(CoxeterType::I2, 5);
  auto mats_at = [&](const Rational& m0) {
    SampledRep rep = build_rep_at(share(i5), m0);
    std::vector<RationalMatrix> mats;
    for (std::size_t s : i5.classes[0]) mats.push_back(restrict_to_class(rep, rep.t_mats[s], 0).to_dense(0));
    return mats;
  };
  CHECK(algebra_dimension(mats_at(Rational(7))) == 25);
  auto degenerate = mats_at(Rational(0));
  CHECK(algebra_dimension(degenerate) < 25);
  CHECK(algebra_dimension_exact(degenerate) == *algebra_dimension_mod_p(degenerate, kSpanPrime));
  CHECK(is_proper_invariant_subspace(degenerate, kernel_at(i5, 0, Rational(0))));
  CHECK_FALSE(is_proper_invariant_subspace(mats_at(Rational(7)), {{1, 0, 0, 0, 0}}));
  CHECK(algebra_dimension({RationalMatrix(1, 1, Rational(3))}) == 1);

  // Block upper triangular generators span n^2 - k(n - k).
  for (std::size_t n : {4u, 6u, 10u}) {
    const std::size_t k = n / 2;
    std::vector<RationalMatrix> gens;
    for (int seed = 1; seed <= 2; ++seed) {
      RationalMatrix m(n, n, Rational(0));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!(i >= k && j < k)) m(i, j) = Rational(static_cast<long>((i * 7 + j * 3 + seed * 5) % 11) - 5, seed);
      gens.push_back(m);
    }
    CHECK(algebra_dimension(gens) == n * n - k * (n - k));
    CHECK(algebra_dimension_exact(gens) == n * n - k * (n - k));
  }
  // Distinct diagonal entries generate the diagonal algebra.
  RationalMatrix diag(5, 5, Rational(0));
  for (std::size_t i = 0; i < 5; ++i) diag(i, i) = static_cast<long>(i * i);
  CHECK(algebra_dimension({diag}) == 5);
}

TEST_CASE("dihedral at m = 0") {
  for (int e : {3, 5, 9}) CHECK(dihedral_m0_check(e).passed);
  CHECK_THROWS_AS(dihedral_m0_check(4), std::invalid_argument);
}

TEST_CASE("B_n explicit model") {
  for (int n = 2; n <= 4; ++n) CHECK(bn_model_check(n).passed);
}
