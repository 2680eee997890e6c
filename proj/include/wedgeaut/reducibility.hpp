#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wedgeaut/space.hpp"

namespace wedgeaut {

/// True iff Hom(H_k(a), H_k(b)) = 0 in every degree k >= 1.
bool hom_trivial_all_degrees(const SpaceDesc& a, const SpaceDesc& b);

/// Result for one unordered pair {first, second} of summand indices
/// (0-based, first < second).
struct PairCheck {
    std::size_t first = 0;
    std::size_t second = 0;
    /// (from, to) whose homology Hom vanishes, if either direction does.
    std::optional<std::pair<std::size_t, std::size_t>> certified_by;

    bool certified() const noexcept { return certified_by.has_value(); }
};

/// Outcome of the sufficient reducibility check. `certified` false means
/// undetermined, not irreducible.
struct ReducibilityResult {
    bool certified = false;
    std::vector<PairCheck> pairs;

    std::vector<PairCheck> failing() const;
};

/// Certifies reducibility when every unordered pair of distinct summands
/// has vanishing homology Hom in at least one direction. This is a
/// sufficient condition only. k = 1 is certified vacuously.
ReducibilityResult check_reducible(const WedgeInput& w);

/// "Hom(H_*(M(2,2)), H_*(S2)) = 0" style justification for one pair.
std::string describe(const PairCheck& pair, const WedgeInput& w);

}  // namespace wedgeaut
