#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crg/param_poly.hpp"
#include "crg/rational.hpp"

namespace crg {

ParamPoly cyclotomic_polynomial(int n);
int euler_phi(int n);

struct CyclotomicField {
  int conductor = 1;
  int degree = 1;
  // Phi_n coefficients, low degree first, monic.
  std::vector<long> modulus;
};

// Cached per-conductor context; the returned reference is stable.
const CyclotomicField& cyclotomic_field(int n);

// Element of Q(zeta_n) in the power basis zeta^0..zeta^(phi(n)-1).
class CycNum {
 public:
  CycNum() : CycNum(1) {}
  explicit CycNum(int conductor);
  CycNum(int conductor, const Rational& value);
  CycNum(int conductor, std::vector<Rational> coeffs);

  static CycNum zero(int n) { return CycNum(n); }
  static CycNum one(int n) { return CycNum(n, Rational(1)); }
  // zeta_n^k for any integer k.
  static CycNum zeta(int n, long k = 1);

  int conductor() const { return field_->conductor; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_rational() const;
  // Only valid when is_rational().
  Rational rational_value() const;

  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  CycNum& operator*=(const Rational& s);

  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator*(CycNum a, const Rational& s) { return a *= s; }
  friend CycNum operator-(CycNum a);
  friend CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inverse(); }
  friend bool operator==(const CycNum& a, const CycNum& b);

  CycNum conj() const;
  // Galois automorphism zeta -> zeta^k, gcd(k, n) = 1.
  CycNum galois(long k) const;
  CycNum inverse() const;

  // Lexicographic order on the coefficient sequence.
  friend int compare(const CycNum& a, const CycNum& b);

  std::string to_string() const;

 private:
  void check_same(const CycNum& o) const;
  static std::vector<Rational> reduce(const CyclotomicField& f, std::vector<Rational> raw);

  const CyclotomicField* field_;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycNum& x) { return x.is_zero(); }
inline CycNum zero_like(const CycNum& x) { return CycNum::zero(x.conductor()); }
inline CycNum one_like(const CycNum& x) { return CycNum::one(x.conductor()); }
inline CycNum inverse(const CycNum& x) { return x.inverse(); }
inline Rational inverse(const Rational& x) { return 1 / x; }

std::size_t hash_value(const CycNum& x);

}  // namespace crg
