#include "crg/quadratic_form.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "crg/linear_algebra.hpp"

namespace crg {

ParamPoly Discriminant::expand() const {
  RootFactorization f{sign, factors, remainder};
  return f.expand();
}

long Discriminant::degree() const {
  long d = remainder.degree();
  for (const auto& f : factors) d += f.second;
  return d;
}

std::string Discriminant::to_string() const {
  std::ostringstream os;
  if (sign < 0) os << "-";
  bool any = false;
  for (const auto& [r, k] : factors) {
    if (r == 0) {
      os << "m";
    } else {
      os << "(m" << (r > 0 ? "-" : "+") << (r > 0 ? r : -r) << ")";
    }
    if (k > 1) os << "^" << k;
    any = true;
  }
  if (remainder != ParamPoly(1) || !any) {
    os << "(" << remainder.to_string() << ")";
  }
  return os.str();
}

Discriminant factor_discriminant(const ParamPoly& p) {
  RootFactorization f = integer_roots(p);
  return Discriminant{f.sign, std::move(f.factors), std::move(f.remainder)};
}

ClassForm gram_matrix(const ReflectionGroupData& g, std::size_t c) {
  if (c >= g.classes.size()) throw std::out_of_range("class index out of range");
  ClassForm f;
  f.class_index = c;
  f.members = g.classes[c];
  const std::size_t d = f.members.size();
  f.a_matrix = RationalMatrix(d, d, Rational(0));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      f.a_matrix(i, j) = (i == j) ? 1 : g.alpha_table[f.members[i]][f.members[j]];
  return f;
}

Discriminant discriminant(const ReflectionGroupData& g, std::size_t c) {
  return factor_discriminant(char_poly(gram_matrix(g, c).a_matrix));
}

NcReport check_n_c(const ReflectionGroupData& g, std::size_t c) { return check_n_c(g, c, discriminant(g, c)); }

NcReport check_n_c(const ReflectionGroupData& g, std::size_t c, const Discriminant& d) {
  NcReport rep;
  rep.n_c = class_stats(g, c).n;
  int mult = 0;
  for (const auto& [r, k] : d.factors) {
    if (r == rep.n_c) mult = k;
    else if (r > rep.n_c) {
      rep.detail = "integer root " + std::to_string(r) + " exceeds N(c) = " + std::to_string(rep.n_c);
      return rep;
    }
  }
  if (mult != 1) {
    rep.detail = "N(c) = " + std::to_string(rep.n_c) + " has multiplicity " + std::to_string(mult);
    return rep;
  }
  if (d.remainder.degree() > 0) {
    // Cauchy bound on the real roots of the unfactored part.
    Rational bound = 0;
    for (long i = 0; i < d.remainder.degree(); ++i) {
      Rational q = abs(d.remainder.coeff(static_cast<std::size_t>(i)) / d.remainder.leading());
      if (q > bound) bound = q;
    }
    bound += 1;
    if (bound >= rep.n_c) {
      rep.detail = "unfactored part has Cauchy bound " + bound.get_str() + " >= N(c)";
      return rep;
    }
  }
  rep.passed = true;
  rep.detail = "N(c) = " + std::to_string(rep.n_c) + " is the largest root, multiplicity 1";
  return rep;
}

std::vector<std::vector<Rational>> kernel_at(const ReflectionGroupData& g, std::size_t c, const Rational& m0) {
  RationalMatrix a = gram_matrix(g, c).a_matrix;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= m0;
  return rank_and_kernel(a).kernel;
}

bool negative_definite_at(const ReflectionGroupData& g, std::size_t c, const Rational& m0) {
  RationalMatrix a = gram_matrix(g, c).a_matrix;
  for (std::size_t i = 0; i < a.rows(); ++i) a(i, i) -= m0;
  std::vector<Rational> minors = leading_principal_minors(a);
  if (minors.size() != a.rows()) return false;
  for (std::size_t k = 0; k < minors.size(); ++k)
    if (sgn(minors[k]) != (k % 2 == 0 ? -1 : 1)) return false;
  return true;
}

namespace {

ParamPoly lin(long r) { return ParamPoly::linear_factor(Rational(r)); }

ParamPoly power(long r, long k) {
  if (k < 0) throw std::logic_error("negative exponent in closed form");
  return lin(r).pow(static_cast<unsigned>(k));
}

}  // namespace

std::vector<ParamPoly> closed_form_discriminants(ClosedFormFamily family, int n) {
  const long N = n;
  switch (family) {
    case ClosedFormFamily::A:
      if (n < 2) throw std::invalid_argument("closed form for A_{n-1} needs n >= 2");
      return {power(-1, N * (N - 3) / 2) * power(N - 3, N - 1) * lin(2 * N - 3)};
    case ClosedFormFamily::D:
      if (n < 4) throw std::invalid_argument("closed form for D_n needs n >= 4");
      return {lin(4 * N - 7) * power(1, N * (N - 1) / 2) * power(-3, N * (N - 3) / 2) * power(2 * N - 7, N - 1)};
    case ClosedFormFamily::B: {
      if (n < 2) throw std::invalid_argument("closed form for B_n needs n >= 2");
      ParamPoly c1 = lin(2 * N - 1) * power(-1, N - 1);
      if (N % 2) c1 = -c1;
      ParamPoly c2 = lin(4 * N - 5) * power(2 * N - 5, N - 1) * power(-1, N * (N - 2));
      return {c1, c2};
    }
    case ClosedFormFamily::I2: {
      if (n < 3) throw std::invalid_argument("closed form for I2(e) needs e >= 3");
      if (N % 2) return {-(lin(N) * power(0, N - 1))};
      ParamPoly c = lin(N - 1) * power(-1, N / 2 - 1);
      if ((N / 2) % 2) c = -c;
      return {c, c};
    }
  }
  throw std::invalid_argument("unknown closed-form family");
}

ClosedFormReport closed_form_check(const ReflectionGroupData& g, ClosedFormFamily family, int n) {
  std::vector<ParamPoly> expected = closed_form_discriminants(family, n);
  ClosedFormReport rep;
  if (expected.size() != g.classes.size()) return rep;
  std::vector<char> used(expected.size(), 0);
  rep.passed = true;
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    ClosedFormRow row;
    row.class_index = c;
    row.class_size = g.classes[c].size();
    row.computed = discriminant(g, c);
    ParamPoly p = row.computed.expand();
    for (std::size_t k = 0; k < expected.size(); ++k) {
      if (used[k]) continue;
      if (p == expected[k] || p == -expected[k]) {
        used[k] = 1;
        row.expected = expected[k];
        row.matches_up_to_sign = true;
        row.sign_matches = p == expected[k];
        break;
      }
    }
    rep.passed = rep.passed && row.matches_up_to_sign;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

ParamPoly conjecture_formula(int e, int r) {
  const long E = e, R = r;
  return lin((2 * R - 3) * E) * power((R - 3) * E, R - 1) * power(0, (E - 1) * R * (R - 1) / 2) *
         power(-E, R * (R - 3) / 2);
}

std::vector<ConjectureCase> conjecture_scan(int e_max, int r_max, std::size_t budget) {
  std::vector<ConjectureCase> out;
  for (int e = 3; e <= e_max; e += 2)
    for (int r = 3; r <= r_max; ++r) {
      const auto count = static_cast<std::size_t>(e) * static_cast<std::size_t>(r * (r - 1) / 2);
      if (count > budget) continue;
      ConjectureCase cs;
      cs.e = e;
      cs.r = r;
      cs.reflections = count;
      ReflectionGroupData g = build_series(e, e, r);
      if (g.classes.size() != 1) throw std::logic_error("G(e,e,r) with odd e should have one class");
      cs.computed = discriminant(g, 0);
      cs.predicted = conjecture_formula(e, r);
      ParamPoly p = cs.computed.expand();
      cs.sign_matches = p == cs.predicted;
      cs.matches_up_to_sign = cs.sign_matches || p == -cs.predicted;
      out.push_back(std::move(cs));
    }
  return out;
}

}  // namespace crg
