#include "crg/param_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace crg {

std::size_t hash_value(const Integer& x) {
  std::size_t h = static_cast<std::size_t>(mpz_size(x.get_mpz_t()));
  hash_combine(h, static_cast<std::size_t>(sgn(x) + 1));
  for (std::size_t i = 0; i < mpz_size(x.get_mpz_t()); ++i) {
    hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), static_cast<mp_size_t>(i))));
  }
  return h;
}

std::size_t hash_value(const Rational& x) {
  std::size_t h = hash_value(x.get_num());
  hash_combine(h, hash_value(x.get_den()));
  return h;
}

std::string to_string(const Rational& x) { return x.get_str(); }

ParamPoly::ParamPoly(const Rational& c) {
  if (!crg::is_zero(c)) c_.push_back(c);
}

ParamPoly::ParamPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

ParamPoly::ParamPoly(std::initializer_list<long> coeffs) {
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

ParamPoly ParamPoly::linear_factor(const Rational& r) {
  return ParamPoly(std::vector<Rational>{-r, 1});
}

void ParamPoly::trim() {
  while (!c_.empty() && crg::is_zero(c_.back())) c_.pop_back();
}

const Rational& ParamPoly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Rational ParamPoly::operator()(const Rational& m0) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * m0 + *it;
  return acc;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return ParamPoly(std::move(out));
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const Rational& s) {
  if (crg::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= s;
  return *this;
}

ParamPoly operator-(ParamPoly a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

ParamPoly ParamPoly::pow(unsigned k) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (k) {
    if (k & 1U) result *= base;
    k >>= 1U;
    if (k) base *= base;
  }
  return result;
}

std::pair<ParamPoly, ParamPoly> ParamPoly::divmod(const ParamPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = c_;
  if (r.size() < d.c_.size()) return {ParamPoly(), *this};
  std::vector<Rational> q(r.size() - d.c_.size() + 1);
  const Rational& lc = d.c_.back();
  for (std::size_t k = q.size(); k-- > 0;) {
    Rational f = r[k + d.c_.size() - 1] / lc;
    q[k] = f;
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) r[k + j] -= f * d.c_[j];
  }
  return {ParamPoly(std::move(q)), ParamPoly(std::move(r))};
}

std::string ParamPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const Rational& c = c_[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || a != 1) {
      os << a.get_str();
      if (k > 0) os << "*";
    }
    if (k >= 1) os << "m";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

std::size_t hash_value(const ParamPoly& p) {
  std::size_t h = p.coeffs().size();
  for (const auto& c : p.coeffs()) hash_combine(h, hash_value(c));
  return h;
}

}  // namespace crg
