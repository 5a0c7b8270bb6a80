#include "crg/krammer.hpp"

#include <stdexcept>

namespace crg {

LaurentQT::LaurentQT(const Rational& c) {
  if (sgn(c) != 0) c_.emplace(Exponent{0, 0}, c);
}

LaurentQT LaurentQT::monomial(const Rational& c, long a, long b) {
  LaurentQT x;
  Rational canonical = c;
  canonical.canonicalize();
  x.add_term({a, b}, canonical);
  return x;
}

void LaurentQT::add_term(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = c_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) c_.erase(it);
}

LaurentQT LaurentQT::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("Laurent polynomial " + to_string() + " is not a unit");
  const auto& [e, c] = *c_.begin();
  return monomial(1 / c, -e.first, -e.second);
}

LaurentQT& LaurentQT::operator+=(const LaurentQT& o) {
  for (const auto& [e, c] : o.c_) add_term(e, c);
  return *this;
}

LaurentQT& LaurentQT::operator-=(const LaurentQT& o) {
  for (const auto& [e, c] : o.c_) add_term(e, -c);
  return *this;
}

LaurentQT operator-(const LaurentQT& a) {
  LaurentQT out;
  for (const auto& [e, c] : a.c_) out.c_.emplace(e, -c);
  return out;
}

LaurentQT operator*(const LaurentQT& a, const LaurentQT& b) {
  LaurentQT out;
  for (const auto& [ea, ca] : a.c_)
    for (const auto& [eb, cb] : b.c_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return out;
}

LaurentQT LaurentQT::pow(long k) const {
  if (k < 0) return unit_inverse().pow(-k);
  LaurentQT out(1), base = *this;
  while (k) {
    if (k & 1) out *= base;
    base *= base;
    k >>= 1;
  }
  return out;
}

std::string LaurentQT::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (const auto& [e, c] : c_) {
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    std::vector<std::string> parts;
    Rational a = abs(c);
    if (a != 1 || (e.first == 0 && e.second == 0)) parts.push_back(a.get_str());
    if (e.first != 0) parts.push_back(e.first == 1 ? "q" : "q^" + std::to_string(e.first));
    if (e.second != 0) parts.push_back(e.second == 1 ? "t" : "t^" + std::to_string(e.second));
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "*" : "") + parts[i];
  }
  return s;
}

std::size_t hash_value(const LaurentQT& x) {
  std::size_t h = 0x51ed27;
  for (const auto& [e, c] : x.terms()) {
    hash_combine(h, std::hash<long>()(e.first));
    hash_combine(h, std::hash<long>()(e.second));
    hash_combine(h, hash_value(c));
  }
  return h;
}

std::size_t KrammerModel::index(int i, int j) const {
  if (i < 1 || i >= j || j > n) throw std::out_of_range("no basis vector x_" + std::to_string(i) + std::to_string(j));
  // Pairs (a, b) with a < i come first.
  std::size_t before = 0;
  for (int a = 1; a < i; ++a) before += static_cast<std::size_t>(n - a);
  return before + static_cast<std::size_t>(j - i - 1);
}

KrammerModel build_krammer(int n) {
  if (n < 2) throw std::invalid_argument("build_krammer needs n >= 2");
  KrammerModel model;
  model.n = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) model.basis.emplace_back(i, j);
  const std::size_t dim = model.basis.size();
  const LaurentQT q = LaurentQT::q(), t = LaurentQT::t(), one(1);
  for (int k = 1; k < n; ++k) {
    LaurentMatrix m(dim, dim, LaurentQT());
    auto set = [&](int i, int j, int a, int b, const LaurentQT& v) {
      // coefficient of x_ab in sigma_k x_ij
      m(model.index(a, b), model.index(i, j)) += v;
    };
    for (const auto& [i, j] : model.basis) {
      if (i == k && j == k + 1) {
        set(i, j, k, k + 1, t * q * q);
      } else if (j == k && i < k) {
        set(i, j, i, k, one - q);
        set(i, j, i, k + 1, q);
      } else if (j == k + 1 && i < k) {
        set(i, j, i, k, one);
        set(i, j, k, k + 1, t * q.pow(k - i + 1) * (q - one));
      } else if (i == k && k + 1 < j) {
        set(i, j, k, k + 1, t * q * (q - one));
        set(i, j, k + 1, j, q);
      } else if (i == k + 1 && k + 1 < j) {
        set(i, j, k, j, one);
        set(i, j, k + 1, j, one - q);
      } else if (j < k || k + 1 < i) {
        set(i, j, i, j, one);
      } else {
        // i < k < k + 1 < j
        set(i, j, i, j, one);
        set(i, j, k, k + 1, t * q.pow(k - i) * (q - one) * (q - one));
      }
    }
    model.sigma.push_back(std::move(m));
  }
  return model;
}

CheckResult check_braid_relations(const KrammerModel& model) {
  const auto& s = model.sigma;
  std::size_t count = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      ++count;
      if (j == i + 1) {
        if (!(s[i] * s[j] * s[i] == s[j] * s[i] * s[j]))
          return CheckResult::fail("braid relation fails for sigma_" + std::to_string(i + 1) + ", sigma_" +
                                   std::to_string(j + 1));
      } else if (!(s[i] * s[j] == s[j] * s[i])) {
        return CheckResult::fail("sigma_" + std::to_string(i + 1) + " and sigma_" + std::to_string(j + 1) +
                                 " do not commute");
      }
    }
  return {true, std::to_string(count) + " relations"};
}

LaurentMatrix sigma_inverse(const KrammerModel& model, int k) {
  const LaurentMatrix& s = model.sigma.at(static_cast<std::size_t>(k - 1));
  const LaurentQT q = LaurentQT::q(), t = LaurentQT::t(), one(1);
  // Roots a = tq^2, 1, b = -q of the cubic.
  const LaurentQT a = t * q * q, b = -q;
  const LaurentQT e1 = a + one + b, e2 = a + b + a * b, e3 = a * b;
  const LaurentMatrix id = LaurentMatrix::identity(model.dimension(), LaurentQT(), one);
  LaurentMatrix poly = s * s;
  poly -= LaurentMatrix(s).scale(e1);
  poly += LaurentMatrix(id).scale(e2);
  return poly.scale(e3.unit_inverse());
}

CheckResult check_inverses(const KrammerModel& model) {
  const LaurentMatrix id = LaurentMatrix::identity(model.dimension(), LaurentQT(), LaurentQT(1));
  for (int k = 1; k < model.n; ++k) {
    LaurentMatrix inv = sigma_inverse(model, k);
    const auto& s = model.sigma[static_cast<std::size_t>(k - 1)];
    if (!(s * inv == id) || !(inv * s == id))
      return CheckResult::fail("sigma_" + std::to_string(k) + " times its cubic inverse is not the identity");
  }
  return {true, ""};
}

CycNum specialize(const LaurentQT& x) {
  const CycNum q = -CycNum::zeta(3, 1);
  const CycNum q_inv = q.inverse();
  CycNum out = CycNum::zero(3);
  for (const auto& [e, c] : x.terms()) {
    CycNum term = CycNum::one(3) * c;
    const CycNum& base = e.first >= 0 ? q : q_inv;
    for (long i = 0; i < (e.first >= 0 ? e.first : -e.first); ++i) term = term * base;
    out += term;
  }
  return out;
}

CycMatrix specialize(const LaurentMatrix& m) {
  std::vector<CycNum> entries;
  entries.reserve(m.entries().size());
  for (const auto& x : m.entries()) entries.push_back(specialize(x));
  return CycMatrix(m.rows(), m.cols(), std::move(entries));
}

CheckResult cubic_specialization_check(const KrammerModel& model) {
  const CycMatrix id = CycMatrix::identity(model.dimension(), CycNum::zero(3), CycNum::one(3));
  for (int k = 1; k < model.n; ++k) {
    CycMatrix s = specialize(model.sigma[static_cast<std::size_t>(k - 1)]);
    if (!(s * s * s == id)) return CheckResult::fail("sigma_" + std::to_string(k) + "^3 != 1 after specialization");
  }
  return {true, std::to_string(model.n - 1) + " generators"};
}

}  // namespace crg
