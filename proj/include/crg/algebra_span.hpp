#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "crg/matrix.hpp"

namespace crg {

// Dimension of the unital associative algebra generated by square matrices.
// A computation modulo a large prime is tried first; reaching n^2 there
// certifies the rational answer, otherwise exact elimination decides.
std::size_t algebra_dimension(const std::vector<RationalMatrix>& mats);

// The two halves, exposed for testing. The modular result is a lower bound
// for the rational one; nullopt when a denominator vanishes modulo p.
std::optional<std::size_t> algebra_dimension_mod_p(const std::vector<RationalMatrix>& mats, std::uint64_t p);
std::size_t algebra_dimension_exact(const std::vector<RationalMatrix>& mats);

// Membership of target in the generated algebra. The modular test can only
// err towards "contained".
std::optional<bool> algebra_contains_mod_p(const std::vector<RationalMatrix>& mats, const RationalMatrix& target,
                                           std::uint64_t p);
bool algebra_contains_exact(const std::vector<RationalMatrix>& mats, const RationalMatrix& target);

// Same test for block-diagonal generators, each given as its list of blocks.
std::optional<bool> block_algebra_contains_mod_p(const std::vector<std::vector<RationalMatrix>>& gens_blocks,
                                                 const std::vector<RationalMatrix>& target, std::uint64_t p);

// True when span(basis) is a proper nonzero subspace mapped into itself by
// every matrix. Such a subspace forces the generated algebra below n^2.
bool is_proper_invariant_subspace(const std::vector<RationalMatrix>& mats,
                                  const std::vector<std::vector<Rational>>& basis);

inline constexpr std::uint64_t kSpanPrime = 2147483647ULL;

// Exact basis of the algebra (row-major flattened matrices).
std::vector<std::vector<Rational>> algebra_basis_exact(const std::vector<RationalMatrix>& mats);

}  // namespace crg
