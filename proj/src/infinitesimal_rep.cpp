#include "crg/infinitesimal_rep.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "crg/linear_algebra.hpp"

namespace crg {
namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

template <class T>
RepBundle<T> build(std::shared_ptr<const ReflectionGroupData> gp, const T& m) {
  const ReflectionGroupData& g = *gp;
  const std::size_t n = g.size();
  const T one = one_like(m);
  RepBundle<T> rep;
  rep.group = std::move(gp);
  rep.m = m;
  for (std::size_t s = 0; s < n; ++s) {
    SparseMatrix<T> perm(n, n), proj(n, n), t(n, n);
    for (std::size_t u = 0; u < n; ++u) {
      perm.add(g.conj_table[s][u], u, one);
      if (u == s) {
        proj.add(s, s, one - m);
        t.add(s, s, m);
      } else {
        T a = T(g.alpha_table[s][u]);
        proj.add(s, u, a);
        t.add(g.conj_table[s][u], u, one);
        t.add(s, u, -a);
      }
    }
    rep.s_mats.push_back(std::move(perm));
    rep.p_mats.push_back(std::move(proj));
    rep.t_mats.push_back(std::move(t));
  }
  return rep;
}

template <class T>
SparseMatrix<T> identity_like(const RepBundle<T>& rep) {
  return SparseMatrix<T>::identity(rep.group->size(), one_like(rep.m));
}

}  // namespace

SymbolicRep build_rep(std::shared_ptr<const ReflectionGroupData> g) { return build(std::move(g), ParamPoly::variable()); }

SymbolicRep build_rep(const ReflectionGroupData& g) {
  return build_rep(std::make_shared<const ReflectionGroupData>(g));
}

SampledRep build_rep_at(std::shared_ptr<const ReflectionGroupData> g, const Rational& m0) {
  return build(std::move(g), m0);
}

SampledRep evaluate(const SymbolicRep& rep, const Rational& m0) {
  SampledRep out;
  out.group = rep.group;
  out.m = m0;
  for (const auto& x : rep.t_mats) out.t_mats.push_back(evaluate(x, m0));
  for (const auto& x : rep.s_mats) out.s_mats.push_back(evaluate(x, m0));
  for (const auto& x : rep.p_mats) out.p_mats.push_back(evaluate(x, m0));
  return out;
}

template <class T>
CheckResult check_integrability(const RepBundle<T>& rep, const FlatTable& flats) {
  const std::size_t n = rep.group->size();
  for (std::size_t f = 0; f < flats.flats.size(); ++f) {
    const auto& members = flats.flats[f].members;
    SparseMatrix<T> tz(n, n);
    for (std::size_t y : members) tz = tz + rep.t_mats[y];
    for (std::size_t x : members) {
      SparseMatrix<T> c = tz * rep.t_mats[x] - rep.t_mats[x] * tz;
      if (!c.empty_matrix()) {
        std::string who;
        for (std::size_t y : members) who += (who.empty() ? "" : ",") + idx(y);
        return CheckResult::fail("[t_Z, t_x] != 0 for flat {" + who + "}, x = " + idx(x));
      }
    }
  }
  return {true, std::to_string(flats.flats.size()) + " flats"};
}

template <class T>
CheckResult check_integrability(const RepBundle<T>& rep) {
  return check_integrability(rep, codim2_flats(*rep.group));
}

template <class T>
CheckResult check_equivariance(const RepBundle<T>& rep, std::size_t exhaustive_limit, std::size_t samples) {
  const ReflectionGroupData& g = *rep.group;
  const std::size_t n = g.size();
  auto check = [&](std::size_t w, std::size_t s) {
    return rep.s_mats[w] * rep.t_mats[s] * rep.s_mats[w] == rep.t_mats[g.conj_table[w][s]];
  };
  if (n <= exhaustive_limit) {
    for (std::size_t w = 0; w < n; ++w)
      for (std::size_t s = 0; s < n; ++s)
        if (!check(w, s)) return CheckResult::fail("w = " + idx(w) + ", s = " + idx(s));
    return {true, "exhaustive over " + std::to_string(n * n) + " pairs"};
  }
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  for (std::size_t k = 0; k < samples; ++k) {
    std::size_t w = pick(rng), s = pick(rng);
    if (!check(w, s)) return CheckResult::fail("w = " + idx(w) + ", s = " + idx(s));
  }
  return {true, std::to_string(samples) + " sampled pairs"};
}

template <class T>
SparseMatrix<T> restrict_to_class(const RepBundle<T>& rep, const SparseMatrix<T>& op, std::size_t c) {
  const auto& members = rep.group->classes.at(c);
  return op.submatrix(members, members);
}

template <class T>
CheckResult check_T_scalar(const RepBundle<T>& rep, std::size_t c) {
  const ReflectionGroupData& g = *rep.group;
  const std::size_t n = g.size();
  SparseMatrix<T> total(n, n);
  for (const auto& t : rep.t_mats) total = total + t;
  const auto& members = g.classes.at(c);
  std::vector<char> in_c(n, 0);
  for (std::size_t s : members) in_c[s] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& [j, v] : total.row(i))
      if (in_c[i] != in_c[j]) return CheckResult::fail("T mixes V_c with another block");
  const long cc = class_stats(g, c).c;
  T scalar = rep.m - one_like(rep.m) + T(cc);
  SparseMatrix<T> expected = SparseMatrix<T>::identity(members.size(), one_like(rep.m)).scaled(scalar);
  if (!(restrict_to_class(rep, total, c) == expected))
    return CheckResult::fail("T on V_c is not (m - 1 + C(c)) I");
  return {true, "C(c) = " + std::to_string(cc)};
}

template <class T>
SparseMatrix<T> full_gram(const RepBundle<T>& rep) {
  const ReflectionGroupData& g = *rep.group;
  const std::size_t n = g.size();
  SparseMatrix<T> gram(n, n);
  for (std::size_t s = 0; s < n; ++s) {
    gram.add(s, s, one_like(rep.m) - rep.m);
    for (std::size_t u = 0; u < n; ++u)
      if (u != s && g.alpha_table[s][u] != 0) gram.add(s, u, T(g.alpha_table[s][u]));
  }
  return gram;
}

template <class T>
CheckResult check_rep_identities(const RepBundle<T>& rep) {
  const ReflectionGroupData& g = *rep.group;
  const std::size_t n = g.size();
  const T one = one_like(rep.m);
  const SparseMatrix<T> id = identity_like(rep);
  const SparseMatrix<T> gram = full_gram(rep);
  for (std::size_t s = 0; s < n; ++s) {
    const auto& t = rep.t_mats[s];
    const auto& sm = rep.s_mats[s];
    const auto& p = rep.p_mats[s];
    std::string at = " (s = " + idx(s) + ")";
    if (!(t == sm - p)) return CheckResult::fail("t != s - p" + at);
    if (!(p * p == p.scaled(one - rep.m))) return CheckResult::fail("p^2 != (1-m) p" + at);
    if (!(sm * p == p) || !(p * sm == p)) return CheckResult::fail("sp = ps = p fails" + at);
    SparseMatrix<T> lhs = sm.scaled(rep.m + one);
    SparseMatrix<T> rhs = t.scaled(rep.m + one) + id - t * t;
    if (!(lhs == rhs)) return CheckResult::fail("(m+1)s != -t^2 + (m+1)t + 1" + at);
    for (std::size_t i = 0; i < n; ++i)
      for (const auto& [j, v] : t.row(i))
        if (g.class_of[i] != g.class_of[j]) return CheckResult::fail("t is not block diagonal" + at);
    if (!(gram * p == p.transpose() * gram)) return CheckResult::fail("p is not self-adjoint" + at);
    if (!(gram * t == t.transpose() * gram)) return CheckResult::fail("t is not self-adjoint" + at);
  }
  return {true, ""};
}

template <class T>
CheckResult dual_check(const RepBundle<T>& rep) {
  const ReflectionGroupData& g = *rep.group;
  const std::size_t n = g.size();
  const T one = one_like(rep.m);
  for (std::size_t s = 0; s < n; ++s) {
    // t_s v_s^* = m v_s^* - sum_u alpha(s,u) v_u^*, t_s v_u^* = v_{sus}^*.
    SparseMatrix<T> d(n, n);
    d.add(s, s, rep.m);
    for (std::size_t u = 0; u < n; ++u) {
      if (u == s) continue;
      if (g.alpha_table[s][u] != 0) d.add(u, s, -T(g.alpha_table[s][u]));
      d.add(g.conj_table[s][u], u, one);
    }
    if (!(rep.t_mats[s].transpose() == d)) return CheckResult::fail("dual action mismatch at s = " + idx(s));
  }
  return {true, ""};
}

namespace {

std::size_t kernel_dim(RationalMatrix a, const Rational& lambda) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= lambda;
  return a.rows() - rank(a);
}

std::vector<std::vector<Rational>> kernel_of(RationalMatrix a, const Rational& lambda) {
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= lambda;
  return rank_and_kernel(a).kernel;
}

bool all_zero(const std::vector<Rational>& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

CheckResult multiplicities(const RationalMatrix& t, const std::map<Rational, std::size_t>& expected,
                           const std::string& where) {
  std::size_t total = 0;
  for (const auto& [lambda, k] : expected) {
    std::size_t d = kernel_dim(t, lambda);
    if (d != k) {
      return CheckResult::fail(where + ": dim ker(t - " + lambda.get_str() + ") = " + std::to_string(d) +
                               ", expected " + std::to_string(k));
    }
    total += d;
  }
  if (total != t.rows()) return CheckResult::fail(where + ": eigenspaces do not fill the space");
  return {true, ""};
}

}  // namespace

CheckResult spectrum_check(const SymbolicRep& rep, std::size_t s, const Rational& m0) {
  if (m0 == 1) throw std::invalid_argument("spectrum_check: t_s is not semisimple at m = 1");
  const ReflectionGroupData& g = *rep.group;
  const std::size_t n = g.size();
  const Rational zero(0), one(1);
  RationalMatrix t = evaluate(rep.t_mats.at(s), m0).to_dense(zero);
  RationalMatrix sm = evaluate(rep.s_mats.at(s), m0).to_dense(zero);
  long k_total = 0;
  for (std::size_t c = 0; c < g.classes.size(); ++c) k_total += k_c(g, c, s);
  auto expected = [&](std::size_t dim, long k) {
    std::map<Rational, std::size_t> e;
    e[m0] += 1;
    e[Rational(-1)] += static_cast<std::size_t>(k);
    e[one] += dim - 1 - static_cast<std::size_t>(k);
    for (auto it = e.begin(); it != e.end();) it = it->second == 0 ? e.erase(it) : std::next(it);
    return e;
  };
  if (auto r = multiplicities(t, expected(n, k_total), "V"); !r) return r;
  const std::size_t c = g.class_of[s];
  SparseMatrix<Rational> tc = restrict_to_class(evaluate(rep, m0), evaluate(rep.t_mats[s], m0), c);
  const long kc = k_c(g, c, s);
  if (auto r = multiplicities(tc.to_dense(zero), expected(g.classes[c].size(), kc), "V_c"); !r) return r;

  std::string detail = "K(s) = " + std::to_string(k_total) + ", K_c(s) = " + std::to_string(kc);
  if (m0 == -1) return {true, detail + "; m = -1 merges eigenvalues, kernel identities not applicable"};
  // Ker(s - 1) = Ker(t - m) + Ker(t - 1) and Ker(s + 1) = Ker(t + 1).
  auto km = kernel_of(t, m0);
  auto k1 = kernel_of(t, one);
  auto kneg = kernel_of(t, Rational(-1));
  for (const auto* basis : {&km, &k1}) {
    for (const auto& v : *basis) {
      std::vector<Rational> w = sm.apply(v);
      for (std::size_t i = 0; i < n; ++i) w[i] -= v[i];
      if (!all_zero(w)) return CheckResult::fail("Ker(t - m) + Ker(t - 1) not inside Ker(s - 1)");
    }
  }
  RationalMatrix joined(km.size() + k1.size(), n, zero);
  for (std::size_t r = 0; r < km.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) joined(r, i) = km[r][i];
  for (std::size_t r = 0; r < k1.size(); ++r)
    for (std::size_t i = 0; i < n; ++i) joined(km.size() + r, i) = k1[r][i];
  if (rank(joined) != km.size() + k1.size() || kernel_dim(sm, one) != km.size() + k1.size())
    return CheckResult::fail("Ker(s - 1) != Ker(t - m) + Ker(t - 1)");
  for (const auto& v : kneg) {
    std::vector<Rational> w = sm.apply(v);
    for (std::size_t i = 0; i < n; ++i) w[i] += v[i];
    if (!all_zero(w)) return CheckResult::fail("Ker(t + 1) not inside Ker(s + 1)");
  }
  if (kernel_dim(sm, Rational(-1)) != kneg.size()) return CheckResult::fail("Ker(s + 1) != Ker(t + 1)");
  return {true, detail};
}

CheckResult parabolic_restriction_check(const SymbolicRep& rep, const std::vector<std::size_t>& seed) {
  const ReflectionGroupData& g = *rep.group;
  const std::size_t n = g.size();
  std::vector<std::size_t> r0 = parabolic_reflections(g, seed);
  if (r0.empty() || r0.size() == n) throw std::invalid_argument("parabolic seed does not give a proper subset");
  std::vector<long> pos(n, -1);
  for (std::size_t k = 0; k < r0.size(); ++k) pos[r0[k]] = static_cast<long>(k);
  const ParamPoly one(1);
  for (std::size_t s : r0) {
    const auto& t = rep.t_mats[s];
    // (i) stability of V_0 and agreement with the representation of R_0.
    SparseMatrix<ParamPoly> t0(r0.size(), r0.size());
    for (std::size_t u : r0) {
      if (u == s) {
        t0.add(static_cast<std::size_t>(pos[s]), static_cast<std::size_t>(pos[s]), rep.m);
        continue;
      }
      long a0 = 0;
      for (std::size_t y : r0)
        if (g.conj_table[y][u] == s) ++a0;
      std::size_t sus = g.conj_table[s][u];
      if (pos[sus] < 0) return CheckResult::fail("R_0 not closed under conjugation");
      t0.add(static_cast<std::size_t>(pos[sus]), static_cast<std::size_t>(pos[u]), one);
      t0.add(static_cast<std::size_t>(pos[s]), static_cast<std::size_t>(pos[u]), ParamPoly(Rational(-a0)));
    }
    SparseMatrix<ParamPoly> cols_in_r0 = t.transpose().submatrix(r0, [&] {
      std::vector<std::size_t> all(n);
      for (std::size_t i = 0; i < n; ++i) all[i] = i;
      return all;
    }());
    for (std::size_t k = 0; k < r0.size(); ++k)
      for (const auto& [row, v] : cols_in_r0.row(k))
        if (pos[row] < 0) return CheckResult::fail("V_0 is not stable under t_" + idx(s));
    if (!(t.submatrix(r0, r0) == t0)) return CheckResult::fail("restriction differs from the R_0 representation");
    // (ii) on V / V_0, t_s permutes the residual basis.
    std::vector<std::size_t> rest;
    for (std::size_t u = 0; u < n; ++u)
      if (pos[u] < 0) rest.push_back(u);
    SparseMatrix<ParamPoly> q = t.submatrix(rest, rest);
    SparseMatrix<ParamPoly> perm(rest.size(), rest.size());
    std::vector<long> rpos(n, -1);
    for (std::size_t k = 0; k < rest.size(); ++k) rpos[rest[k]] = static_cast<long>(k);
    for (std::size_t k = 0; k < rest.size(); ++k) {
      long target = rpos[g.conj_table[s][rest[k]]];
      if (target < 0) return CheckResult::fail("conjugation moves a residual reflection into R_0");
      perm.add(static_cast<std::size_t>(target), k, one);
    }
    if (!(q == perm)) return CheckResult::fail("quotient action is not the permutation action");
  }
  return {true, "|R_0| = " + std::to_string(r0.size())};
}

CheckResult dihedral_m0_check(int e) {
  if (e < 3 || e % 2 == 0) throw std::invalid_argument("dihedral_m0_check needs odd e >= 3");
  auto gp = std::make_shared<const ReflectionGroupData>(build_series(e, e, 2));
  const ReflectionGroupData& g = *gp;
  const std::size_t n = g.size();
  if (g.classes.size() != 1) return CheckResult::fail("expected a single class");
  // (i) the kernel at m = 0 is the zero-sum hyperplane.
  auto ker = kernel_at(g, 0, 0);
  if (ker.size() != n - 1) return CheckResult::fail("kernel at m = 0 has dimension " + std::to_string(ker.size()));
  for (const auto& v : ker) {
    Rational sum = 0;
    for (const auto& x : v) sum += x;
    if (sgn(sum) != 0) return CheckResult::fail("kernel vector with nonzero sum");
  }
  RationalMatrix a = gram_matrix(g, 0).a_matrix;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<Rational> d(n, Rational(0));
    d[i] = 1;
    d[i + 1] = -1;
    if (!all_zero(a.apply(d))) return CheckResult::fail("zero-sum vector outside the kernel");
  }
  // (ii) t_s and s agree on U.
  SampledRep rep = build_rep_at(gp, 0);
  for (std::size_t s = 0; s < n; ++s) {
    RationalMatrix t = rep.t_mats[s].to_dense(0);
    RationalMatrix sm = rep.s_mats[s].to_dense(0);
    for (const auto& v : ker)
      if (t.apply(v) != sm.apply(v)) return CheckResult::fail("t_s and s differ on U");
  }
  // (iii) characters over the enumerated dihedral group.
  const int cond = g.conductor;
  std::vector<CycMatrix> elems = {CycMatrix::identity(2, CycNum::zero(cond), CycNum::one(cond))};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& r : g.reflections) {
      CycMatrix x = elems[k] * r.element.matrix();
      if (std::find(elems.begin(), elems.end(), x) == elems.end()) elems.push_back(std::move(x));
    }
  if (elems.size() != static_cast<std::size_t>(2 * e)) return CheckResult::fail("dihedral group has wrong order");
  // 2-dimensional representations: rotation diag(z^a, z^-a) -> diag(z^ka, z^-ka),
  // reflections -> antidiagonal.
  auto rho = [&](const CycMatrix& x, int k) {
    CycMatrix out(2, 2, CycNum::zero(cond));
    bool rotation = x(0, 1).is_zero();
    CycNum entry = rotation ? x(0, 0) : x(0, 1);
    int a = 0;
    while (!(CycNum::zeta(cond, a) == entry)) ++a;
    if (rotation) {
      out(0, 0) = CycNum::zeta(cond, static_cast<long>(k) * a);
      out(1, 1) = CycNum::zeta(cond, -static_cast<long>(k) * a);
    } else {
      out(0, 1) = CycNum::zeta(cond, static_cast<long>(k) * a);
      out(1, 0) = CycNum::zeta(cond, -static_cast<long>(k) * a);
    }
    return out;
  };
  for (int k = 1; k <= (e - 1) / 2; ++k)
    for (const auto& x : elems)
      for (const auto& y : elems)
        if (!(rho(x * y, k) == rho(x, k) * rho(y, k))) return CheckResult::fail("2-dimensional model is not a homomorphism");
  for (const auto& x : elems) {
    long commuting = 0;
    for (const auto& r : g.reflections)
      if (x * r.element.matrix() == r.element.matrix() * x) ++commuting;
    CycNum chi_u(cond, Rational(commuting - 1));
    CycNum sum = CycNum::zero(cond);
    for (int k = 1; k <= (e - 1) / 2; ++k) {
      CycMatrix m = rho(x, k);
      sum += m(0, 0) + m(1, 1);
    }
    if (!(chi_u == sum)) return CheckResult::fail("chi_U differs from the sum of 2-dimensional characters");
  }
  return {true, "2-dimensional characters vanish on reflections and take z^ka + z^-ka on rotations"};
}

CheckResult bn_model_check(int n) {
  if (n < 2) throw std::invalid_argument("bn_model_check needs n >= 2");
  auto gp = std::make_shared<const ReflectionGroupData>(build_coxeter(CoxeterType::B, n));
  const ReflectionGroupData& g = *gp;
  const CycNum one = CycNum::one(g.conductor);
  // Sign change of coordinate i: the only -1 sits on the diagonal.
  std::vector<long> sign_change(n, -1);
  std::vector<long> which(g.size(), -1);
  for (const auto& r : g.reflections) {
    const CycMatrix& x = r.element.matrix();
    for (int i = 0; i < n; ++i)
      if (x(i, i) == -one) {
        sign_change[i] = static_cast<long>(r.index);
        which[r.index] = i;
      }
  }
  for (long s : sign_change)
    if (s < 0) return CheckResult::fail("sign-change reflection missing");
  const std::size_t c = g.class_of[static_cast<std::size_t>(sign_change[0])];
  if (g.classes[c].size() != static_cast<std::size_t>(n)) return CheckResult::fail("sign changes do not form a class");
  std::vector<std::size_t> basis;
  for (long s : sign_change) basis.push_back(static_cast<std::size_t>(s));
  SymbolicRep rep = build_rep(gp);
  const ParamPoly m = ParamPoly::variable();
  for (const auto& r : g.reflections) {
    SparseMatrix<ParamPoly> expected(n, n);
    if (which[r.index] >= 0) {
      const auto i = static_cast<std::size_t>(which[r.index]);
      for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
        if (j == i) {
          expected.add(i, i, m);
        } else {
          expected.add(j, j, ParamPoly(1));
          expected.add(i, j, ParamPoly(-2));
        }
      }
    } else {
      // (signed) transposition: find the swapped pair from the matrix
      const CycMatrix& x = r.element.matrix();
      for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
        std::size_t image = k;
        for (std::size_t row = 0; row < static_cast<std::size_t>(n); ++row)
          if (!x(row, k).is_zero()) image = row;
        expected.add(image, k, ParamPoly(1));
      }
    }
    SparseMatrix<ParamPoly> actual = rep.t_mats[r.index].submatrix(basis, basis);
    if (!(actual == expected)) return CheckResult::fail("t_" + idx(r.index) + " differs from the explicit model");
  }
  return {true, std::to_string(g.size()) + " reflections on the sign-change block"};
}

#define CRG_INSTANTIATE(T)                                                                    \
  template CheckResult check_integrability<T>(const RepBundle<T>&, const FlatTable&);         \
  template CheckResult check_integrability<T>(const RepBundle<T>&);                           \
  template CheckResult check_equivariance<T>(const RepBundle<T>&, std::size_t, std::size_t);  \
  template CheckResult check_T_scalar<T>(const RepBundle<T>&, std::size_t);                   \
  template CheckResult check_rep_identities<T>(const RepBundle<T>&);                          \
  template CheckResult dual_check<T>(const RepBundle<T>&);                                    \
  template SparseMatrix<T> full_gram<T>(const RepBundle<T>&);                                 \
  template SparseMatrix<T> restrict_to_class<T>(const RepBundle<T>&, const SparseMatrix<T>&, std::size_t);

CRG_INSTANTIATE(ParamPoly)
CRG_INSTANTIATE(Rational)

#undef CRG_INSTANTIATE

}  // namespace crg
