#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "crg/arrangement.hpp"
#include "crg/check_result.hpp"
#include "crg/quadratic_form.hpp"
#include "crg/reflection_group.hpp"
#include "crg/sparse_matrix.hpp"

namespace crg {

// Operators on V = span{v_s}, basis ordered by reflection index. With
// T = ParamPoly the parameter is the indeterminate m; with T = Rational it
// is a fixed sample value.
template <class T>
struct RepBundle {
  std::shared_ptr<const ReflectionGroupData> group;
  T m;
  std::vector<SparseMatrix<T>> t_mats;
  std::vector<SparseMatrix<T>> s_mats;
  std::vector<SparseMatrix<T>> p_mats;
};

using SymbolicRep = RepBundle<ParamPoly>;
using SampledRep = RepBundle<Rational>;

SymbolicRep build_rep(std::shared_ptr<const ReflectionGroupData> g);
SymbolicRep build_rep(const ReflectionGroupData& g);
SampledRep build_rep_at(std::shared_ptr<const ReflectionGroupData> g, const Rational& m0);
SampledRep evaluate(const SymbolicRep& rep, const Rational& m0);

template <class T>
CheckResult check_integrability(const RepBundle<T>& rep, const FlatTable& flats);
template <class T>
CheckResult check_integrability(const RepBundle<T>& rep);

// Exhaustive up to exhaustive_limit reflections, otherwise `samples` random pairs.
template <class T>
CheckResult check_equivariance(const RepBundle<T>& rep, std::size_t exhaustive_limit = 60, std::size_t samples = 500);

template <class T>
CheckResult check_T_scalar(const RepBundle<T>& rep, std::size_t c);

// t = s - p, p^2 = (1-m)p, sp = ps = p, (m+1)s = -t^2 + (m+1)t + 1,
// block structure, and self-adjointness of p and t for the Gram matrix.
template <class T>
CheckResult check_rep_identities(const RepBundle<T>& rep);

template <class T>
CheckResult dual_check(const RepBundle<T>& rep);

CheckResult spectrum_check(const SymbolicRep& rep, std::size_t s, const Rational& m0);

CheckResult parabolic_restriction_check(const SymbolicRep& rep, const std::vector<std::size_t>& seed);

// Gram matrix of the form on all of V (block diagonal over classes).
template <class T>
SparseMatrix<T> full_gram(const RepBundle<T>& rep);

// Restriction of an operator on V to the block V_c.
template <class T>
SparseMatrix<T> restrict_to_class(const RepBundle<T>& rep, const SparseMatrix<T>& op, std::size_t c);

CheckResult dihedral_m0_check(int e);

// Explicit formulas for B_n on the block of the n sign changes x_i:
// t_i x_j = x_j - 2 x_i, t_i x_i = m x_i, and (signed) transpositions
// swapping x_i and x_j while fixing the other x_k.
CheckResult bn_model_check(int n);

}  // namespace crg
