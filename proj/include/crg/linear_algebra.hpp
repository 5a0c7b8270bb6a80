#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

#include "crg/matrix.hpp"

namespace crg {

template <class T>
concept FieldScalar = std::same_as<T, Rational> || std::same_as<T, CycNum>;

template <FieldScalar T>
struct RankKernel {
  std::size_t rank = 0;
  std::vector<std::vector<T>> kernel;
};

// Reduced row echelon form with unit pivots; zero rows are dropped.
template <FieldScalar T>
struct Echelon {
  std::vector<std::vector<T>> rows;
  std::vector<std::size_t> pivots;
};

Echelon<Rational> reduced_echelon(const RationalMatrix& m);
Echelon<CycNum> reduced_echelon(const CycMatrix& m);

// Rational input is eliminated over the integers with primitive rows;
// cyclotomic input uses Gauss-Jordan over Q(zeta).
RankKernel<Rational> rank_and_kernel(const RationalMatrix& m);
RankKernel<CycNum> rank_and_kernel(const CycMatrix& m);

// Rank only (Bareiss elimination for rational input).
std::size_t rank(const RationalMatrix& m);
std::size_t rank(const CycMatrix& m);

// Leading principal minors, via Bareiss.
std::vector<Rational> leading_principal_minors(const RationalMatrix& m);

}  // namespace crg
