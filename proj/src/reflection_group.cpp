#include "crg/reflection_group.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "crg/linear_algebra.hpp"

namespace crg {

bool GroupElement::is_identity() const {
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = 0; j < m_.cols(); ++j) {
      const CycNum& x = m_(i, j);
      if (i == j ? !(x == CycNum::one(x.conductor())) : !x.is_zero()) return false;
    }
  return true;
}

int compare(const GroupElement& a, const GroupElement& b) {
  const auto& x = a.matrix().entries();
  const auto& y = b.matrix().entries();
  if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
  for (std::size_t k = 0; k < x.size(); ++k) {
    int c = compare(x[k], y[k]);
    if (c != 0) return c;
  }
  return 0;
}

std::size_t hash_value(const GroupElement& g) { return hash_value(g.matrix()); }

namespace {

using Vec = std::vector<CycNum>;

struct VecHash {
  std::size_t operator()(const Vec& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) hash_combine(h, hash_value(x));
    return h;
  }
};

struct RankOne {
  Vec root;
  Vec form;
};

CycMatrix identity_matrix(std::size_t n, int conductor) {
  return CycMatrix::identity(n, CycNum::zero(conductor), CycNum::one(conductor));
}

// Writes s = I - root*form with the root's first nonzero coordinate 1.
RankOne rank_one_form(const CycMatrix& s) {
  const std::size_t n = s.rows();
  const int cond = s(0, 0).conductor();
  CycMatrix d = identity_matrix(n, cond) - s;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d(i, j).is_zero()) continue;
      RankOne r;
      CycNum inv = d(i, j).inverse();
      for (std::size_t k = 0; k < n; ++k) r.root.push_back(d(k, j) * inv);
      for (std::size_t k = 0; k < n; ++k) r.form.push_back(d(i, k));
      return r;
    }
  }
  throw std::invalid_argument("identity matrix is not a reflection");
}

void normalize(RankOne& r) {
  for (std::size_t i = 0; i < r.root.size(); ++i) {
    if (r.root[i].is_zero()) continue;
    CycNum c = r.root[i];
    CycNum inv = c.inverse();
    for (auto& x : r.root) x = x * inv;
    for (auto& x : r.form) x = x * c;
    return;
  }
}

// y s y^{-1} for y an involution: I - (y r)(f y).
RankOne conjugate(const CycMatrix& y, const RankOne& s) {
  const std::size_t n = y.rows();
  const int cond = y(0, 0).conductor();
  RankOne out;
  out.root.assign(n, CycNum::zero(cond));
  out.form.assign(n, CycNum::zero(cond));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (!y(i, k).is_zero() && !s.root[k].is_zero()) out.root[i] += y(i, k) * s.root[k];
      if (!s.form[k].is_zero() && !y(k, i).is_zero()) out.form[i] += s.form[k] * y(k, i);
    }
  normalize(out);
  return out;
}

Vec key_of(const RankOne& r) {
  Vec k = r.root;
  k.insert(k.end(), r.form.begin(), r.form.end());
  return k;
}

CycMatrix matrix_of(const RankOne& r) {
  const std::size_t n = r.root.size();
  CycMatrix m = identity_matrix(n, r.root[0].conductor());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!r.root[i].is_zero() && !r.form[j].is_zero()) m(i, j) -= r.root[i] * r.form[j];
  return m;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

bool is_reflection(const CycMatrix& g) {
  if (!g.square() || g.rows() == 0) return false;
  const int cond = g(0, 0).conductor();
  CycMatrix id = identity_matrix(g.rows(), cond);
  if (!(g * g == id)) return false;
  return rank(g - id) == 1;
}

ReflectionGroupData assemble_group(std::string name, int conductor, const std::vector<CycMatrix>& reflections,
                                   std::size_t expected_count) {
  ReflectionGroupData g;
  g.name = std::move(name);
  g.conductor = conductor;
  g.expected_reflection_count = expected_count;
  if (reflections.empty()) throw std::invalid_argument("group has no reflections");
  g.rank = static_cast<int>(reflections.front().rows());

  std::vector<std::size_t> order(reflections.size());
  std::iota(order.begin(), order.end(), 0);
  std::vector<GroupElement> elems;
  elems.reserve(reflections.size());
  for (const auto& m : reflections) elems.emplace_back(m);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return compare(elems[a], elems[b]) < 0; });

  std::unordered_map<Vec, std::size_t, VecHash> index;
  std::vector<RankOne> forms;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const CycMatrix& m = reflections[order[k]];
    if (k > 0 && m == reflections[order[k - 1]]) throw std::invalid_argument("duplicate reflection");
    RankOne r = rank_one_form(m);
    normalize(r);
    Reflection refl;
    refl.element = elems[order[k]];
    refl.root = r.root;
    refl.form = r.form;
    refl.index = k;
    g.reflections.push_back(std::move(refl));
    index.emplace(key_of(r), k);
    forms.push_back(std::move(r));
  }

  const std::size_t n = g.reflections.size();
  g.conj_table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t y = 0; y < n; ++y) {
    const CycMatrix& ym = g.reflections[y].element.matrix();
    for (std::size_t s = 0; s < n; ++s) {
      if (s == y) {
        g.conj_table[y][s] = s;
        continue;
      }
      auto it = index.find(key_of(conjugate(ym, forms[s])));
      if (it == index.end()) throw std::invalid_argument("reflection set is not closed under conjugation");
      g.conj_table[y][s] = it->second;
    }
  }

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t s = 0; s < n; ++s) {
      std::size_t a = find_root(parent, s), b = find_root(parent, g.conj_table[y][s]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  g.class_of.assign(n, 0);
  std::vector<long> class_id(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t r = find_root(parent, s);
    if (class_id[r] < 0) {
      class_id[r] = static_cast<long>(g.classes.size());
      g.classes.emplace_back();
    }
    g.class_of[s] = static_cast<std::size_t>(class_id[r]);
    g.classes[g.class_of[s]].push_back(s);
  }

  g.alpha_table.assign(n, std::vector<long>(n, 0));
  for (std::size_t y = 0; y < n; ++y)
    for (std::size_t u = 0; u < n; ++u) {
      std::size_t s = g.conj_table[y][u];
      if (s != u) ++g.alpha_table[s][u];
    }

  if (expected_count != 0 && n != expected_count) {
    throw std::runtime_error("metadata mismatch: generator set does not reach all reflections (" +
                             std::to_string(n) + " of " + std::to_string(expected_count) + ")");
  }
  return g;
}

ReflectionGroupData build_series(int m_param, int p, int r) {
  if (m_param < 1 || p < 1 || r < 1) throw std::invalid_argument("series parameters must be positive");
  if (m_param % p != 0) throw std::invalid_argument("p must divide m in G(m,p,r)");
  const int d = m_param / p;
  if (d != 1 && d != 2) throw std::invalid_argument("unsupported pseudo-reflection series");
  if (d == 1 && r == 1) throw std::invalid_argument("G(m,m,1) has no reflections");
  const int cond = m_param <= 2 ? 1 : m_param;
  const auto n = static_cast<std::size_t>(r);
  std::vector<CycMatrix> refl;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int k = 0; k < m_param; ++k) {
        CycMatrix s = identity_matrix(n, cond);
        CycNum z = (cond == 1) ? CycNum(1, Rational(k % 2 ? -1 : 1)) : CycNum::zeta(cond, k);
        s(i, i) = CycNum::zero(cond);
        s(j, j) = CycNum::zero(cond);
        s(i, j) = z;
        s(j, i) = z.inverse();
        refl.push_back(std::move(s));
      }
  if (d == 2) {
    for (std::size_t i = 0; i < n; ++i) {
      CycMatrix s = identity_matrix(n, cond);
      s(i, i) = CycNum(cond, Rational(-1));
      refl.push_back(std::move(s));
    }
  }
  const std::size_t expected =
      static_cast<std::size_t>(m_param) * n * (n - 1) / 2 + (d == 2 ? n : 0);
  return assemble_group("G(" + std::to_string(m_param) + "," + std::to_string(p) + "," + std::to_string(r) + ")",
                        cond, refl, expected);
}

namespace {

// Reflections of a root system given by the Gram matrix of its simple roots,
// in simple-root coordinates.
std::vector<CycMatrix> root_system_reflections(const CycMatrix& gram) {
  const std::size_t n = gram.rows();
  const int cond = gram(0, 0).conductor();
  auto pairing = [&](const Vec& x, const Vec& y) {
    CycNum acc = CycNum::zero(cond);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!x[i].is_zero() && !y[j].is_zero() && !gram(i, j).is_zero()) acc += x[i] * gram(i, j) * y[j];
    return acc;
  };
  auto reflect = [&](const Vec& x, const Vec& beta) {
    CycNum c = pairing(x, beta) * CycNum(cond, Rational(2)) / pairing(beta, beta);
    Vec out = x;
    for (std::size_t i = 0; i < n; ++i)
      if (!beta[i].is_zero()) out[i] -= c * beta[i];
    return out;
  };
  std::vector<Vec> simple;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e(n, CycNum::zero(cond));
    e[i] = CycNum::one(cond);
    simple.push_back(e);
  }
  std::unordered_map<Vec, std::size_t, VecHash> seen;
  std::vector<Vec> roots;
  for (const auto& e : simple) {
    seen.emplace(e, roots.size());
    roots.push_back(e);
  }
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (const auto& a : simple) {
      Vec r = reflect(roots[k], a);
      if (seen.emplace(r, roots.size()).second) roots.push_back(std::move(r));
    }
  std::unordered_map<Vec, std::size_t, VecHash> refl_keys;
  std::vector<CycMatrix> out;
  for (const auto& beta : roots) {
    // Reflection x -> x - 2 (x,beta)/(beta,beta) beta as I - beta * form.
    CycNum scale = CycNum(cond, Rational(2)) / pairing(beta, beta);
    RankOne r;
    r.root = beta;
    r.form.assign(n, CycNum::zero(cond));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i)
        if (!beta[i].is_zero() && !gram(i, j).is_zero()) r.form[j] += beta[i] * gram(i, j);
    for (auto& x : r.form) x = x * scale;
    normalize(r);
    if (refl_keys.emplace(key_of(r), out.size()).second) out.push_back(matrix_of(r));
  }
  return out;
}

CycMatrix coxeter_gram(const std::vector<std::vector<Rational>>& b, int cond) {
  CycMatrix g(b.size(), b.size(), CycNum::zero(cond));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) g(i, j) = CycNum(cond, b[i][j]);
  return g;
}

// Simply-laced Cartan matrix from an edge list (1-based labels).
CycMatrix simply_laced(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) b[i][i] = 2;
  for (auto [x, y] : edges) {
    b[static_cast<std::size_t>(x - 1)][static_cast<std::size_t>(y - 1)] = -1;
    b[static_cast<std::size_t>(y - 1)][static_cast<std::size_t>(x - 1)] = -1;
  }
  return coxeter_gram(b, 1);
}

// Linear H-type diagram with the first bond of order 5.
CycMatrix icosahedral_gram(std::size_t n) {
  const int cond = 5;
  CycNum half_tau = (CycNum::zeta(5, 2) + CycNum::zeta(5, 3)) * Rational(1, 2);  // -tau/2
  CycMatrix g(n, n, CycNum::zero(cond));
  for (std::size_t i = 0; i < n; ++i) g(i, i) = CycNum::one(cond);
  g(0, 1) = g(1, 0) = half_tau;
  for (std::size_t i = 1; i + 1 < n; ++i) g(i, i + 1) = g(i + 1, i) = CycNum(cond, Rational(-1, 2));
  return g;
}

}  // namespace

ReflectionGroupData build_coxeter(CoxeterType type, int n) {
  auto require = [&](int lo, const char* what) {
    if (n < lo || n > 9) throw std::invalid_argument(std::string("unsupported rank for type ") + what);
  };
  switch (type) {
    case CoxeterType::A: {
      require(1, "A");
      ReflectionGroupData g = build_series(1, 1, n + 1);
      g.name = "A" + std::to_string(n);
      return g;
    }
    case CoxeterType::B: {
      require(1, "B");
      ReflectionGroupData g = build_series(2, 1, n);
      g.name = "B" + std::to_string(n);
      return g;
    }
    case CoxeterType::D: {
      require(2, "D");
      ReflectionGroupData g = build_series(2, 2, n);
      g.name = "D" + std::to_string(n);
      return g;
    }
    case CoxeterType::I2: {
      if (n < 2) throw std::invalid_argument("unsupported order for type I2");
      ReflectionGroupData g = build_series(n, n, 2);
      g.name = "I2(" + std::to_string(n) + ")";
      return g;
    }
    case CoxeterType::H3:
      return assemble_group("H3", 5, root_system_reflections(icosahedral_gram(3)), 15);
    case CoxeterType::H4:
      return assemble_group("H4", 5, root_system_reflections(icosahedral_gram(4)), 60);
    case CoxeterType::F4: {
      std::vector<std::vector<Rational>> b = {{2, -1, 0, 0},
                                              {-1, 2, -1, 0},
                                              {0, -1, 1, Rational(-1, 2)},
                                              {0, 0, Rational(-1, 2), 1}};
      return assemble_group("F4", 1, root_system_reflections(coxeter_gram(b, 1)), 24);
    }
    case CoxeterType::E6:
      return assemble_group("E6", 1, root_system_reflections(simply_laced(6, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}})),
                            36);
    case CoxeterType::E7:
      return assemble_group(
          "E7", 1, root_system_reflections(simply_laced(7, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {2, 4}})), 63);
    case CoxeterType::E8:
      return assemble_group(
          "E8", 1,
          root_system_reflections(simply_laced(8, {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}})), 120);
  }
  throw std::invalid_argument("unsupported Coxeter type");
}

ReflectionGroupData build_from_generators(const GeneratorFile& data) {
  if (data.generators.empty()) throw std::invalid_argument("generator file has no generators");
  std::vector<RankOne> items;
  std::unordered_map<Vec, std::size_t, VecHash> seen;
  for (const auto& gmat : data.generators) {
    if (gmat.rows() != static_cast<std::size_t>(data.rank) || !is_reflection(gmat))
      throw std::invalid_argument("generator fails the reflection test");
    RankOne r = rank_one_form(gmat);
    normalize(r);
    if (seen.emplace(key_of(r), items.size()).second) items.push_back(std::move(r));
  }
  std::vector<CycMatrix> mats;
  for (const auto& r : items) mats.push_back(matrix_of(r));
  // Closure under mutual conjugation; every pair is visited once a member is new.
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      RankOne a = conjugate(mats[j], items[i]);
      RankOne b = conjugate(mats[i], items[j]);
      for (RankOne* c : {&a, &b}) {
        if (seen.emplace(key_of(*c), items.size()).second) {
          mats.push_back(matrix_of(*c));
          items.push_back(std::move(*c));
        }
      }
    }
  }
  return assemble_group(data.name, data.conductor, mats, data.expected_reflection_count);
}

long alpha(const ReflectionGroupData& g, std::size_t s, std::size_t u) {
  if (s >= g.size() || u >= g.size()) throw std::out_of_range("reflection index out of range");
  if (s == u) throw std::invalid_argument("alpha is defined for distinct reflections only");
  return g.alpha_table[s][u];
}

ClassStats class_stats(const ReflectionGroupData& g, std::size_t c) {
  if (c >= g.classes.size()) throw std::out_of_range("class index out of range");
  ClassStats out;
  bool first = true;
  for (std::size_t s : g.classes[c]) {
    long n = 1;
    for (std::size_t u : g.classes[c])
      if (u != s) n += g.alpha_table[s][u];
    long cc = 0;
    for (std::size_t u = 0; u < g.size(); ++u)
      if (g.commute(u, s)) ++cc;
    if (first) {
      out.n = n;
      out.c = cc;
      first = false;
    } else if (n != out.n || cc != out.c) {
      throw std::logic_error("class statistics depend on the representative");
    }
  }
  return out;
}

long k_c(const ReflectionGroupData& g, std::size_t c, std::size_t s) {
  if (c >= g.classes.size()) throw std::out_of_range("class index out of range");
  long count = 0;
  for (std::size_t u : g.classes[c])
    if (!g.commute(u, s)) ++count;
  if (count % 2 != 0) throw std::logic_error("odd number of non-commuting reflections");
  return count / 2;
}

void SimpleGraph::add_edge(std::size_t a, std::size_t b) {
  if (a == b) throw std::invalid_argument("self-loop");
  if (a >= vertex_count || b >= vertex_count) throw std::out_of_range("edge endpoint out of range");
  edges.emplace(std::min(a, b), std::max(a, b));
}

bool SimpleGraph::has_edge(std::size_t a, std::size_t b) const {
  return edges.count({std::min(a, b), std::max(a, b)}) > 0;
}

SimpleGraph class_graph(const ReflectionGroupData& g, std::size_t c) {
  const auto& members = g.classes.at(c);
  SimpleGraph gr;
  gr.vertex_count = members.size();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (g.alpha_table[members[a]][members[b]] > 0) gr.add_edge(a, b);
  return gr;
}

bool is_connected(const SimpleGraph& gr) {
  if (gr.vertex_count <= 1) return true;
  std::vector<std::vector<std::size_t>> adj(gr.vertex_count);
  for (auto [a, b] : gr.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(gr.vertex_count, 0);
  std::vector<std::size_t> stack = {0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == gr.vertex_count;
}

namespace {

// Pairs {a<b} indexed lexicographically, starting at offset.
std::vector<std::vector<std::size_t>> pair_index(std::size_t n, std::size_t offset) {
  std::vector<std::vector<std::size_t>> idx(n, std::vector<std::size_t>(n, 0));
  std::size_t k = offset;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) idx[a][b] = idx[b][a] = k++;
  return idx;
}

void add_pair_edges(const SimpleGraph& gr, const std::vector<std::vector<std::size_t>>& idx, SimpleGraph& out) {
  const std::size_t n = gr.vertex_count;
  // {a,b} ~ {a,c} when b ~ c: enumerate by shared vertex a and edge (b,c).
  for (auto [b, c] : gr.edges)
    for (std::size_t a = 0; a < n; ++a) {
      if (a == b || a == c) continue;
      out.add_edge(idx[a][b], idx[a][c]);
    }
}

}  // namespace

SimpleGraph lambda2_graph(const SimpleGraph& gr) {
  const std::size_t n = gr.vertex_count;
  SimpleGraph out;
  out.vertex_count = n * (n - (n > 0 ? 1 : 0)) / 2;
  add_pair_edges(gr, pair_index(n, 0), out);
  return out;
}

SimpleGraph s2_graph(const SimpleGraph& gr) {
  const std::size_t n = gr.vertex_count;
  SimpleGraph out;
  out.vertex_count = n + n * (n - (n > 0 ? 1 : 0)) / 2;
  auto idx = pair_index(n, n);
  add_pair_edges(gr, idx, out);
  for (auto [a, b] : gr.edges) {
    out.add_edge(a, idx[a][b]);
    out.add_edge(b, idx[a][b]);
  }
  return out;
}

}  // namespace crg
