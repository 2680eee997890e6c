#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wedgeaut/ext_order.hpp"

namespace wedgeaut {

/// A bracket monomial over generators z_1..z_k. Children are referenced by
/// their position in the owning HallBasis, so a Commutator is only
/// meaningful together with that basis.
struct Commutator {
    int generator = -1;  // 0-based generator index for leaves, -1 otherwise
    std::size_t left = 0;
    std::size_t right = 0;
    int weight = 1;
    std::vector<int> multidegree;  // k entries summing to weight

    bool is_leaf() const noexcept { return generator >= 0; }
};

/// The basic commutators on k generators up to a weight bound, in their
/// global order.
///
/// Weight 1 is z_1 < ... < z_k. A bracket [a,b] of weight w is basic when
/// a < b and, if b = [c,d], c <= a. Within a weight, elements are ordered
/// lexicographically by (a, b) in the order already fixed on lower weights,
/// which makes every bound a prefix of every larger bound.
class HallBasis {
public:
    /// Predicate over multidegrees. It must be down-closed: if it accepts m,
    /// it accepts every nonzero m' <= m componentwise.
    using MultidegreeFilter = std::function<bool(std::span<const int>)>;

    HallBasis(int generators, int max_weight);

    /// Only elements whose multidegree passes `keep`. Because `keep` is
    /// down-closed, the result is exactly the subsequence of the unfiltered
    /// basis with accepted multidegrees.
    HallBasis(int generators, int max_weight, const MultidegreeFilter& keep);

    int generators() const noexcept { return generators_; }
    int max_weight() const noexcept { return max_weight_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const Commutator& operator[](std::size_t i) const { return elements_[i]; }
    auto begin() const noexcept { return elements_.begin(); }
    auto end() const noexcept { return elements_.end(); }

    /// "z2", "[z1,[z1,z2]]".
    std::string render(std::size_t i) const;

private:
    int generators_;
    int max_weight_;
    std::vector<Commutator> elements_;
};

/// Witt number (1/w) * sum_{d | w} mu(d) k^(w/d): the number of basic
/// commutators of weight exactly w on k generators.
BigInt count_by_weight(int k, int w);

}  // namespace wedgeaut
