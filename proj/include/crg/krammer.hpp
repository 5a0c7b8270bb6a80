#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crg/check_result.hpp"
#include "crg/cyclotomic.hpp"
#include "crg/matrix.hpp"
#include "crg/rational.hpp"

namespace crg {

// Laurent polynomial in q and t with rational coefficients:
// sum of coef * q^a * t^b over a finite set of exponent pairs.
class LaurentQT {
 public:
  using Exponent = std::pair<long, long>;

  LaurentQT() = default;
  LaurentQT(long c) : LaurentQT(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentQT(const Rational& c);                  // NOLINT(google-explicit-constructor)

  static LaurentQT monomial(const Rational& c, long a, long b);
  static LaurentQT q() { return monomial(1, 1, 0); }
  static LaurentQT t() { return monomial(1, 0, 1); }

  const std::map<Exponent, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // Units of the ring are exactly the nonzero monomials.
  bool is_unit() const { return c_.size() == 1; }
  LaurentQT unit_inverse() const;

  LaurentQT& operator+=(const LaurentQT& o);
  LaurentQT& operator-=(const LaurentQT& o);
  LaurentQT& operator*=(const LaurentQT& o) { return *this = *this * o; }

  friend LaurentQT operator+(LaurentQT a, const LaurentQT& b) { return a += b; }
  friend LaurentQT operator-(LaurentQT a, const LaurentQT& b) { return a -= b; }
  friend LaurentQT operator-(const LaurentQT& a);
  friend LaurentQT operator*(const LaurentQT& a, const LaurentQT& b);
  friend bool operator==(const LaurentQT& a, const LaurentQT& b) { return a.c_ == b.c_; }

  LaurentQT pow(long k) const;
  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const Rational& c);
  std::map<Exponent, Rational> c_;
};

inline bool is_zero(const LaurentQT& x) { return x.is_zero(); }
inline LaurentQT zero_like(const LaurentQT&) { return LaurentQT(); }
inline LaurentQT one_like(const LaurentQT&) { return LaurentQT(1); }
std::size_t hash_value(const LaurentQT& x);

using LaurentMatrix = Matrix<LaurentQT>;

// Krammer matrices of the braid group on n strands on the basis x_ij,
// i < j, ordered lexicographically. sigma[k-1] is the matrix of sigma_k.
struct KrammerModel {
  int n = 0;
  std::vector<std::pair<int, int>> basis;
  std::vector<LaurentMatrix> sigma;

  std::size_t dimension() const { return basis.size(); }
  std::size_t index(int i, int j) const;
};

KrammerModel build_krammer(int n);

// Commutation for |i - j| >= 2 and the braid relation for adjacent generators.
CheckResult check_braid_relations(const KrammerModel& model);

// sigma^-1 from (sigma - tq^2)(sigma - 1)(sigma + q) = 0.
LaurentMatrix sigma_inverse(const KrammerModel& model, int k);
CheckResult check_inverses(const KrammerModel& model);

// q -> -j (j a primitive cube root of unity), t -> 1.
CycNum specialize(const LaurentQT& x);
CycMatrix specialize(const LaurentMatrix& m);

// sigma_k^3 = 1 for every k after specialization.
CheckResult cubic_specialization_check(const KrammerModel& model);

}  // namespace crg
