#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "crg/rational.hpp"

namespace crg {

// Univariate polynomial in the parameter m; coefficient of m^i at index i.
class ParamPoly {
 public:
  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT: constants convert implicitly
  ParamPoly(long c) : ParamPoly(Rational(c)) {}  // NOLINT
  ParamPoly(int c) : ParamPoly(Rational(c)) {}   // NOLINT
  explicit ParamPoly(std::vector<Rational> coeffs);
  ParamPoly(std::initializer_list<long> coeffs);

  static ParamPoly variable() { return ParamPoly(std::vector<Rational>{0, 1}); }
  // (m - r)
  static ParamPoly linear_factor(const Rational& r);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;

  Rational operator()(const Rational& m0) const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rational& s);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator-(ParamPoly a);
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

  ParamPoly pow(unsigned k) const;

  // Quotient and remainder by a nonzero divisor.
  std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& d) const;

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

inline bool is_zero(const ParamPoly& p) { return p.is_zero(); }
inline ParamPoly zero_like(const ParamPoly&) { return ParamPoly(); }
inline ParamPoly one_like(const ParamPoly&) { return ParamPoly(1); }

std::size_t hash_value(const ParamPoly& p);

}  // namespace crg
