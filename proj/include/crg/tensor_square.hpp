#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crg/infinitesimal_rep.hpp"

namespace crg {

// Operators on V_c (x) V_c attached to one reflection s; e_a (x) e_b sits at
// index a * |c| + b.
template <class T>
struct TensorOps {
  SparseMatrix<T> t_s;    // t (x) 1 + 1 (x) t
  SparseMatrix<T> s;      // s (x) s
  SparseMatrix<T> delta;  // s (x) 1 + 1 (x) s
  SparseMatrix<T> p;      // p (x) 1 + 1 (x) p
  SparseMatrix<T> q;      // p (x) p
  SparseMatrix<T> r;      // p (x) s + s (x) p
};

template <class T>
TensorOps<T> tensor_ops(const RepBundle<T>& rep, std::size_t s, std::size_t c);

// The 15 products of the multiplication table, pairwise commutativity, and the
// three polynomial identities expressing P, S + 1 and Q through powers of T.
template <class T>
CheckResult ds_table_check(const RepBundle<T>& rep, std::size_t s, std::size_t c);

// Restrictions of an operator on V_c (x) V_c to the alternating subspace
// (basis e_a ^ e_b, a < b) and the symmetric one (basis e_a e_b, a <= b).
// Throws if the operator does not commute with the flip.
RationalMatrix alternating_part(const SparseMatrix<Rational>& op, std::size_t d);
RationalMatrix symmetric_part(const SparseMatrix<Rational>& op, std::size_t d);

// {-3,-1,0,1,3} together with the integer roots of the discriminant of c.
std::vector<Rational> excluded_tensor_values(const ReflectionGroupData& g, std::size_t c);

struct TensorSquareReport {
  bool passed = false;
  bool skipped = false;
  std::size_t lambda_dim = 0;
  std::size_t lambda_algebra = 0;
  std::size_t sym_dim = 0;
  std::size_t sym_algebra = 0;
  std::string detail;
};

TensorSquareReport tensor_square_check(const SampledRep& rep, std::size_t c);

// p_s (x) p_u + p_u (x) p_s lies in the algebra generated by the T_x, x in c.
CheckResult psu_membership_check(const SampledRep& rep, std::size_t c, std::size_t s, std::size_t u);

}  // namespace crg
