#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "crg/matrix.hpp"

namespace crg {

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(CycMatrix m) : m_(std::move(m)) {}
  const CycMatrix& matrix() const { return m_; }
  std::size_t rank() const { return m_.rows(); }
  friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
    return GroupElement(a.m_ * b.m_);
  }
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }
  bool is_identity() const;

 private:
  CycMatrix m_;
};

// Lexicographic comparison of the row-major coefficient sequences.
int compare(const GroupElement& a, const GroupElement& b);
std::size_t hash_value(const GroupElement& g);

// s = I - root * form, root normalized with first nonzero coordinate 1.
struct Reflection {
  GroupElement element;
  std::vector<CycNum> root;
  std::vector<CycNum> form;
  std::size_t index = 0;
};

struct ReflectionGroupData {
  std::string name;
  int rank = 0;
  int conductor = 1;
  std::vector<Reflection> reflections;
  // conj_table[y][s] = index of y s y^{-1}.
  std::vector<std::vector<std::size_t>> conj_table;
  // Classes ordered by smallest member; members sorted.
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_of;
  // Off-diagonal conjugation counts; the diagonal is stored as 0.
  std::vector<std::vector<long>> alpha_table;
  std::size_t expected_reflection_count = 0;

  std::size_t size() const { return reflections.size(); }
  bool commute(std::size_t s, std::size_t u) const { return conj_table[s][u] == u; }
};

ReflectionGroupData build_series(int m_param, int p, int r);

enum class CoxeterType { A, B, D, I2, H3, H4, F4, E6, E7, E8 };

// n is the rank for A/B/D and the order parameter e for I2; ignored otherwise.
ReflectionGroupData build_coxeter(CoxeterType type, int n = 0);

struct GeneratorFile {
  std::string name;
  int rank = 0;
  int conductor = 1;
  std::size_t expected_reflection_count = 0;
  std::string order;
  std::vector<CycMatrix> generators;
};

GeneratorFile parse_generator_file(const std::string& json_text);
GeneratorFile load_generator_file(const std::string& path);
ReflectionGroupData build_from_generators(const GeneratorFile& data);

// Reflection test: g^2 = I and rank(g - I) = 1.
bool is_reflection(const CycMatrix& g);

// Assembles all tables from a complete, duplicate-free list of reflections.
ReflectionGroupData assemble_group(std::string name, int conductor, const std::vector<CycMatrix>& reflections,
                                   std::size_t expected_count);

long alpha(const ReflectionGroupData& g, std::size_t s, std::size_t u);

struct ClassStats {
  long n = 0;  // N(c)
  long c = 0;  // C(c)
};

ClassStats class_stats(const ReflectionGroupData& g, std::size_t c);
long k_c(const ReflectionGroupData& g, std::size_t c, std::size_t s);

struct SimpleGraph {
  std::size_t vertex_count = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  void add_edge(std::size_t a, std::size_t b);
  bool has_edge(std::size_t a, std::size_t b) const;
};

SimpleGraph class_graph(const ReflectionGroupData& g, std::size_t c);
bool is_connected(const SimpleGraph& gr);
SimpleGraph lambda2_graph(const SimpleGraph& gr);
SimpleGraph s2_graph(const SimpleGraph& gr);

}  // namespace crg
