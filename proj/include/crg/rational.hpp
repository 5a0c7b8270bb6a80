#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

namespace crg {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }

inline bool is_integral(const Rational& x) { return x.get_den() == 1; }

std::size_t hash_value(const Integer& x);
std::size_t hash_value(const Rational& x);

inline void hash_combine(std::size_t& seed, std::size_t v) {
  seed ^= v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

std::string to_string(const Rational& x);

}  // namespace crg
