#include "crg/arrangement.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "crg/linear_algebra.hpp"

namespace crg {
namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<CycNum>& v) const {
    std::size_t h = v.size();
    for (const auto& x : v) hash_combine(h, hash_value(x));
    return h;
  }
};

CycMatrix form_rows(const ReflectionGroupData& g, const std::vector<std::size_t>& idx) {
  const auto n = static_cast<std::size_t>(g.rank);
  CycMatrix m(idx.size(), n, CycNum::zero(g.conductor));
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t j = 0; j < n; ++j) m(k, j) = g.reflections[idx[k]].form[j];
  return m;
}

std::vector<CycNum> echelon_key(const CycMatrix& m) {
  Echelon<CycNum> e = reduced_echelon(m);
  std::vector<CycNum> key;
  for (const auto& row : e.rows) key.insert(key.end(), row.begin(), row.end());
  return key;
}

}  // namespace

std::size_t FlatTable::flat_of(std::size_t s, std::size_t u) const {
  if (s == u) throw std::invalid_argument("a flat needs two distinct reflections");
  long f = pair_to_flat.at(s).at(u);
  if (f < 0) throw std::logic_error("pair without flat");
  return static_cast<std::size_t>(f);
}

FlatTable codim2_flats(const ReflectionGroupData& g) {
  const std::size_t n = g.size();
  FlatTable t;
  t.pair_to_flat.assign(n, std::vector<long>(n, -1));
  if (g.rank < 2) return t;
  std::unordered_map<std::vector<CycNum>, std::size_t, KeyHash> index;
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t u = s + 1; u < n; ++u) {
      std::vector<CycNum> key = echelon_key(form_rows(g, {s, u}));
      auto [it, inserted] = index.emplace(std::move(key), t.flats.size());
      if (inserted) t.flats.push_back(Flat2{it->first, {}});
      Flat2& f = t.flats[it->second];
      f.members.push_back(s);
      f.members.push_back(u);
      t.pair_to_flat[s][u] = t.pair_to_flat[u][s] = static_cast<long>(it->second);
    }
  for (auto& f : t.flats) {
    std::sort(f.members.begin(), f.members.end());
    f.members.erase(std::unique(f.members.begin(), f.members.end()), f.members.end());
  }
  return t;
}

std::vector<std::size_t> reflections_containing(const FlatTable& table, std::size_t s, std::size_t u) {
  return table.flats[table.flat_of(s, u)].members;
}

std::vector<std::size_t> reflections_containing(const ReflectionGroupData& g, std::size_t s, std::size_t u) {
  if (s == u) throw std::invalid_argument("a flat needs two distinct reflections");
  std::size_t r = rank(form_rows(g, {s, u}));
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.size(); ++x)
    if (rank(form_rows(g, {s, u, x})) == r) out.push_back(x);
  return out;
}

std::vector<std::size_t> parabolic_reflections(const ReflectionGroupData& g, const std::vector<std::size_t>& seed) {
  if (seed.empty()) throw std::invalid_argument("parabolic seed must be non-empty");
  for (std::size_t s : seed)
    if (s >= g.size()) throw std::out_of_range("seed index out of range");
  Echelon<CycNum> e = reduced_echelon(form_rows(g, seed));
  const std::size_t r = e.rows.size();
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < g.size(); ++x) {
    // The form of x lies in the span iff reducing it against the pivots leaves zero.
    std::vector<CycNum> v = g.reflections[x].form;
    for (std::size_t k = 0; k < r; ++k) {
      CycNum c = v[e.pivots[k]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!e.rows[k][j].is_zero()) v[j] -= c * e.rows[k][j];
    }
    if (std::all_of(v.begin(), v.end(), [](const CycNum& z) { return z.is_zero(); })) out.push_back(x);
  }
  return out;
}

std::size_t fixed_space_dimension(const ReflectionGroupData& g, const std::vector<std::size_t>& seed) {
  return static_cast<std::size_t>(g.rank) - rank(form_rows(g, seed));
}

}  // namespace crg
