#include "crg/infinitesimal_rep.hpp"
#include "crg/tensor_square.hpp"
#include "doctest.h"

using namespace crg;

namespace {

std::shared_ptr<const ReflectionGroupData> share(ReflectionGroupData g) {
  return std::make_shared<const ReflectionGroupData>(std::move(g));
}

Rational trace(const RationalMatrix& a) {
  Rational t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

RationalMatrix class_block(const SampledRep& rep, std::size_t s, std::size_t c) {
  return restrict_to_class(rep, rep.t_mats[s], c).to_dense(0);
}

std::size_t class_of_size(const ReflectionGroupData& g, std::size_t size) {
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    if (g.classes[c].size() == size) return c;
  FAIL("no such class");
  return 0;
}

}  // namespace

TEST_CASE("the D_s table holds over the polynomial ring") {
  ReflectionGroupData b2 = build_series(2, 1, 2);
  SymbolicRep rb2 = build_rep(b2);
  for (std::size_t c = 0; c < b2.classes.size(); ++c) CHECK(ds_table_check(rb2, b2.classes[c][0], c).passed);
  ReflectionGroupData i5 = build_coxeter(CoxeterType::I2, 5);
  CHECK(ds_table_check(build_rep(i5), 0, 0).passed);
  ReflectionGroupData a3 = build_coxeter(CoxeterType::A, 3);
  CheckResult r = ds_table_check(build_rep(a3), 2, 0);
  CHECK(r.passed);
  CHECK(r.detail == "18 identities");
}

TEST_CASE("tensor operators") {
  ReflectionGroupData a2 = build_coxeter(CoxeterType::A, 2);
  SampledRep rep = build_rep_at(share(a2), Rational(5, 2));
  TensorOps<Rational> ops = tensor_ops(rep, 0, 0);
  const std::size_t n = 9;
  auto id = SparseMatrix<Rational>::identity(n, Rational(1));
  CHECK(ops.s * ops.s == id);
  CHECK(ops.t_s == ops.delta - ops.p);
  const std::vector<const SparseMatrix<Rational>*> all = {&ops.t_s, &ops.s, &ops.delta, &ops.p, &ops.q, &ops.r};
  for (auto* x : all)
    for (auto* y : all) CHECK((*x) * (*y) == (*y) * (*x));
}

TEST_CASE("alternating and symmetric parts against trace formulas") {
  ReflectionGroupData b3 = build_coxeter(CoxeterType::B, 3);
  SampledRep rep = build_rep_at(share(b3), Rational(11, 3));
  const std::size_t c = class_of_size(b3, 6);
  const std::size_t d = 6;
  for (std::size_t s : b3.classes[c]) {
    RationalMatrix x = class_block(rep, s, c);
    SparseMatrix<Rational> xs = SparseMatrix<Rational>::from_dense(x);
    SparseMatrix<Rational> xx = kron(xs, xs);
    RationalMatrix alt = alternating_part(xx, d), sym = symmetric_part(xx, d);
    CHECK(alt.rows() == d * (d - 1) / 2);
    CHECK(sym.rows() == d * (d + 1) / 2);
    Rational t1 = trace(x), t2 = trace(x * x);
    CHECK(trace(alt) == (t1 * t1 - t2) / 2);
    CHECK(trace(sym) == (t1 * t1 + t2) / 2);
    // The derivation x (x) 1 + 1 (x) x restricts with traces (d-1) tr x and (d+1) tr x.
    auto id = SparseMatrix<Rational>::identity(d, Rational(1));
    SparseMatrix<Rational> der = kron(xs, id) + kron(id, xs);
    CHECK(trace(alternating_part(der, d)) == Rational(static_cast<long>(d - 1)) * t1);
    CHECK(trace(symmetric_part(der, d)) == Rational(static_cast<long>(d + 1)) * t1);
  }
  RationalMatrix x = class_block(rep, b3.classes[c][0], c);
  auto id = SparseMatrix<Rational>::identity(d, Rational(1));
  CHECK_THROWS(alternating_part(kron(SparseMatrix<Rational>::from_dense(x), id), d));
}

TEST_CASE("tensor square irreducibility") {
  ReflectionGroupData i5 = build_coxeter(CoxeterType::I2, 5);
  TensorSquareReport r = tensor_square_check(build_rep_at(share(i5), Rational(7)), 0);
  CHECK(r.passed);
  CHECK(r.lambda_dim == 10);
  CHECK(r.lambda_algebra == 100);
  CHECK(r.sym_dim == 15);
  CHECK(r.sym_algebra == 225);

  ReflectionGroupData a3 = build_coxeter(CoxeterType::A, 3);
  TensorSquareReport a = tensor_square_check(build_rep_at(share(a3), Rational(7)), 0);
  CHECK(a.lambda_algebra == 225);
  CHECK(a.sym_algebra == 441);

  TensorSquareReport single = tensor_square_check(build_rep_at(share(build_series(2, 1, 1)), Rational(7)), 0);
  CHECK(single.skipped);

  CHECK_THROWS_AS(tensor_square_check(build_rep_at(share(i5), Rational(5)), 0), std::invalid_argument);
  CHECK_THROWS_AS(tensor_square_check(build_rep_at(share(i5), Rational(3)), 0), std::invalid_argument);
  auto excluded = excluded_tensor_values(i5, 0);
  for (long x : {-3L, -1L, 0L, 1L, 3L, 5L}) CHECK(std::find(excluded.begin(), excluded.end(), Rational(x)) != excluded.end());
}

TEST_CASE("p_s . p_u lies in the algebra of the T_x") {
  ReflectionGroupData i5 = build_coxeter(CoxeterType::I2, 5);
  SampledRep r5 = build_rep_at(share(i5), Rational(7));
  std::size_t adjacent = 1;
  while (alpha(i5, 0, adjacent) == 0) ++adjacent;
  CHECK(psu_membership_check(r5, 0, 0, adjacent).passed);
  CHECK_THROWS_AS(psu_membership_check(r5, 0, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(psu_membership_check(build_rep_at(share(i5), Rational(-3)), 0, 0, 1), std::invalid_argument);

  ReflectionGroupData a3 = build_coxeter(CoxeterType::A, 3);
  SampledRep r3 = build_rep_at(share(a3), Rational(7));
  std::size_t disjoint = 1;
  while (!a3.commute(0, disjoint)) ++disjoint;
  CHECK(alpha(a3, 0, disjoint) == 0);
  CHECK(psu_membership_check(r3, 0, 0, disjoint).passed);
}
