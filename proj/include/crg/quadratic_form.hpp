#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "crg/charpoly.hpp"
#include "crg/reflection_group.hpp"

namespace crg {

// Integer matrix A_c: diagonal 1, off-diagonal alpha(s,u). The Gram matrix of
// the form on V_c is A_c - m I.
struct ClassForm {
  std::size_t class_index = 0;
  std::vector<std::size_t> members;
  RationalMatrix a_matrix;

  std::size_t size() const { return members.size(); }
};

struct Discriminant {
  int sign = 1;
  std::vector<std::pair<long, int>> factors;
  ParamPoly remainder;

  ParamPoly expand() const;
  long degree() const;
  std::string to_string() const;
  friend bool operator==(const Discriminant& a, const Discriminant& b) {
    return a.sign == b.sign && a.factors == b.factors && a.remainder == b.remainder;
  }
};

Discriminant factor_discriminant(const ParamPoly& p);

ClassForm gram_matrix(const ReflectionGroupData& g, std::size_t c);
Discriminant discriminant(const ReflectionGroupData& g, std::size_t c);

struct NcReport {
  bool passed = false;
  long n_c = 0;
  std::string detail;
};

NcReport check_n_c(const ReflectionGroupData& g, std::size_t c);
NcReport check_n_c(const ReflectionGroupData& g, std::size_t c, const Discriminant& d);

std::vector<std::vector<Rational>> kernel_at(const ReflectionGroupData& g, std::size_t c, const Rational& m0);

// A_c - m0 I is negative definite: the k-th leading principal minor has
// sign (-1)^k. This holds exactly for m0 > N(c).
bool negative_definite_at(const ReflectionGroupData& g, std::size_t c, const Rational& m0);

enum class ClosedFormFamily { A, B, D, I2 };

// Expected discriminants, one per class, with the sign as stated by the
// closed form. For A the parameter is n in A_{n-1}; for I2 it is e.
std::vector<ParamPoly> closed_form_discriminants(ClosedFormFamily family, int n);

struct ClosedFormRow {
  std::size_t class_index = 0;
  std::size_t class_size = 0;
  Discriminant computed;
  ParamPoly expected;
  bool matches_up_to_sign = false;
  bool sign_matches = false;
};

struct ClosedFormReport {
  bool passed = false;
  std::vector<ClosedFormRow> rows;
};

ClosedFormReport closed_form_check(const ReflectionGroupData& g, ClosedFormFamily family, int n);

ParamPoly conjecture_formula(int e, int r);

struct ConjectureCase {
  int e = 0;
  int r = 0;
  std::size_t reflections = 0;
  Discriminant computed;
  ParamPoly predicted;
  bool matches_up_to_sign = false;
  bool sign_matches = false;
};

std::vector<ConjectureCase> conjecture_scan(int e_max, int r_max, std::size_t budget = 90);

}  // namespace crg
