#include "crg/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace crg {

int euler_phi(int n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
  int result = n;
  int x = n;
  for (int p = 2; p * p <= x; ++p) {
    if (x % p) continue;
    while (x % p == 0) x /= p;
    result -= result / p;
  }
  if (x > 1) result -= result / x;
  return result;
}

ParamPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  // m^n - 1 divided by Phi_d for every proper divisor d.
  std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] = 1;
  ParamPoly p(std::move(c));
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = p.divmod(cyclotomic_polynomial(d)).first;
  }
  return p;
}

const CyclotomicField& cyclotomic_field(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CyclotomicField>> cache;
  if (n < 1) throw std::invalid_argument("unknown conductor " + std::to_string(n));
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto f = std::make_unique<CyclotomicField>();
  f->conductor = n;
  f->degree = euler_phi(n);
  const ParamPoly phi = cyclotomic_polynomial(n);
  for (const auto& c : phi.coeffs()) f->modulus.push_back(c.get_num().get_si());
  const CyclotomicField& ref = *f;
  cache.emplace(n, std::move(f));
  return ref;
}

CycNum::CycNum(int conductor) : field_(&cyclotomic_field(conductor)) {
  c_.assign(static_cast<std::size_t>(field_->degree), Rational(0));
}

CycNum::CycNum(int conductor, const Rational& value) : CycNum(conductor) { c_[0] = value; }

CycNum::CycNum(int conductor, std::vector<Rational> coeffs) : field_(&cyclotomic_field(conductor)) {
  c_ = reduce(*field_, std::move(coeffs));
}

std::vector<Rational> CycNum::reduce(const CyclotomicField& f, std::vector<Rational> raw) {
  const auto phi = static_cast<std::size_t>(f.degree);
  for (std::size_t k = raw.size(); k-- > phi;) {
    if (sgn(raw[k]) == 0) continue;
    Rational lead = raw[k];
    std::size_t base = k - phi;
    for (std::size_t j = 0; j < phi; ++j) {
      if (f.modulus[j] != 0) raw[base + j] -= lead * f.modulus[j];
    }
    raw[k] = 0;
  }
  raw.resize(phi);
  return raw;
}

CycNum CycNum::zeta(int n, long k) {
  long e = ((k % n) + n) % n;
  std::vector<Rational> raw(static_cast<std::size_t>(e) + 1);
  raw[static_cast<std::size_t>(e)] = 1;
  return CycNum(n, std::move(raw));
}

bool CycNum::is_zero() const {
  for (const auto& x : c_)
    if (sgn(x) != 0) return false;
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational CycNum::rational_value() const {
  if (!is_rational()) throw std::domain_error("cyclotomic number is not rational");
  return c_[0];
}

void CycNum::check_same(const CycNum& o) const {
  if (field_ != o.field_) {
    throw std::invalid_argument("mixed-conductor arithmetic: " + std::to_string(conductor()) + " vs " +
                                std::to_string(o.conductor()));
  }
}

CycNum& CycNum::operator+=(const CycNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycNum& CycNum::operator-=(const CycNum& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycNum operator*(const CycNum& a, const CycNum& b) {
  a.check_same(b);
  const std::size_t n = a.c_.size();
  if (n == 1) return CycNum(a.conductor(), a.c_[0] * b.c_[0]);
  std::vector<Rational> raw(2 * n - 1);
  bool any = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      raw[i + j] += a.c_[i] * b.c_[j];
      any = true;
    }
  }
  if (!any) return CycNum::zero(a.conductor());
  return CycNum(a.conductor(), std::move(raw));
}

CycNum& CycNum::operator*=(const CycNum& o) { return *this = *this * o; }

CycNum& CycNum::operator*=(const Rational& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

CycNum operator-(CycNum a) {
  for (auto& x : a.c_) x = -x;
  return a;
}

bool operator==(const CycNum& a, const CycNum& b) {
  a.check_same(b);
  return a.c_ == b.c_;
}

CycNum CycNum::galois(long k) const {
  const int n = conductor();
  if (std::gcd(static_cast<long>(n), k) != 1) throw std::invalid_argument("galois: exponent not coprime to conductor");
  std::vector<Rational> raw(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    long e = ((static_cast<long>(i) * k) % n + n) % n;
    raw[static_cast<std::size_t>(e)] += c_[i];
  }
  return CycNum(n, std::move(raw));
}

CycNum CycNum::conj() const { return galois(-1); }

CycNum CycNum::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (is_rational()) return CycNum(conductor(), 1 / c_[0]);
  // Product of the nontrivial Galois conjugates over the (rational) norm.
  const int n = conductor();
  CycNum others = one(n);
  for (long k = 2; k < n; ++k) {
    if (std::gcd(static_cast<long>(n), k) == 1) others *= galois(k);
  }
  CycNum norm = *this * others;
  return others * (1 / norm.rational_value());
}

int compare(const CycNum& a, const CycNum& b) {
  a.check_same(b);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return 0;
}

std::string CycNum::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    if (!first) os << (sgn(c_[i]) < 0 ? " - " : " + ");
    else if (sgn(c_[i]) < 0) os << "-";
    first = false;
    Rational a = abs(c_[i]);
    if (i == 0) {
      os << a.get_str();
      continue;
    }
    if (a != 1) os << a.get_str() << "*";
    os << "z" << conductor();
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

std::size_t hash_value(const CycNum& x) {
  std::size_t h = static_cast<std::size_t>(x.conductor());
  for (const auto& c : x.coeffs()) hash_combine(h, hash_value(c));
  return h;
}

}  // namespace crg
