#pragma once

#include <span>

#include "wedgeaut/space.hpp"

namespace wedgeaut {

/// The smash product of m_t copies of each desusps[t].
///
/// Normalization: all spheres give a sphere; one Moore factor smashed with
/// spheres is a suspended Moore space; two or more Moore factors give a
/// GenericSmash. Connectivity is additive (sum of conn plus factors - 1),
/// dimension is the sum of dimensions.
///
/// Throws InvalidInputError for a zero multidegree or mismatched lengths,
/// UnsupportedSpaceError for a GenericSmash factor.
SpaceDesc smash_power(std::span<const int> multidegree, std::span<const SpaceDesc> desusps);

/// Connectivity of smash_power(multidegree, desusps) without building it.
int smash_power_conn(std::span<const int> multidegree, std::span<const SpaceDesc> desusps);

}  // namespace wedgeaut
