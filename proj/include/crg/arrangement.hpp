#pragma once

#include <cstddef>
#include <vector>

#include "crg/reflection_group.hpp"

namespace crg {

// A codimension-2 flat H_s \cap H_u, keyed by the reduced echelon form of
// the two defining linear forms.
struct Flat2 {
  std::vector<CycNum> key;
  std::vector<std::size_t> members;
};

struct FlatTable {
  std::vector<Flat2> flats;
  // pair_to_flat[s][u] for s != u; -1 on the diagonal.
  std::vector<std::vector<long>> pair_to_flat;

  std::size_t flat_of(std::size_t s, std::size_t u) const;
};

FlatTable codim2_flats(const ReflectionGroupData& g);
std::vector<std::size_t> reflections_containing(const FlatTable& table, std::size_t s, std::size_t u);
std::vector<std::size_t> reflections_containing(const ReflectionGroupData& g, std::size_t s, std::size_t u);

// Reflections whose hyperplane contains the intersection of the seed hyperplanes.
std::vector<std::size_t> parabolic_reflections(const ReflectionGroupData& g, const std::vector<std::size_t>& seed);

// Dimension of the intersection of the seed hyperplanes.
std::size_t fixed_space_dimension(const ReflectionGroupData& g, const std::vector<std::size_t>& seed);

}  // namespace crg
