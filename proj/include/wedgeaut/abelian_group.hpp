#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wedgeaut/ext_order.hpp"

namespace wedgeaut {

/// Finitely generated abelian group Z^rank + Z/d1 + ... + Z/dr, stored in
/// invariant-factor form: every d_i >= 2 and d_i | d_{i+1}. Values are
/// always normalized, so structural equality is isomorphism.
class AbelianGroup {
public:
    /// The trivial group.
    AbelianGroup() = default;

    /// Normalizes an arbitrary list of cyclic orders. Orders equal to 1 are
    /// dropped; an order of 0 throws std::invalid_argument. Throws
    /// std::overflow_error if an invariant factor does not fit in 64 bits.
    AbelianGroup(unsigned rank, std::vector<std::uint64_t> cyclic_orders);

    static AbelianGroup trivial() { return {}; }
    static AbelianGroup integers(unsigned rank = 1) { return AbelianGroup(rank, {}); }
    static AbelianGroup cyclic(std::uint64_t n) { return AbelianGroup(0, {n}); }

    /// Parses "0", "Z", "Z^3", "Z/12" and "+"-joined sums such as
    /// "Z + Z/2 + Z/2". Whitespace is ignored. Throws ParseError.
    static AbelianGroup parse(std::string_view text);

    unsigned rank() const noexcept { return rank_; }
    const std::vector<std::uint64_t>& torsion() const noexcept { return torsion_; }
    bool is_trivial() const noexcept { return rank_ == 0 && torsion_.empty(); }
    bool is_finite() const noexcept { return rank_ == 0; }

    /// Canonical rendering, e.g. "0", "Z^2 + Z/2 + Z/4".
    std::string to_string() const;

    friend AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b);

    friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
    friend auto operator<=>(const AbelianGroup&, const AbelianGroup&) = default;

private:
    unsigned rank_ = 0;
    std::vector<std::uint64_t> torsion_;
};

/// Infinite when rank > 0, otherwise the product of the invariant factors.
ExtOrder group_order(const AbelianGroup& g);

/// Hom(a, b), summand-wise: Hom(Z,B) = B, Hom(Z/d,Z) = 0,
/// Hom(Z/d,Z/e) = Z/gcd(d,e).
AbelianGroup hom_group(const AbelianGroup& a, const AbelianGroup& b);

/// Ext(a, b), summand-wise: Ext(Z,B) = 0, Ext(Z/d,Z) = Z/d,
/// Ext(Z/d,Z/e) = Z/gcd(d,e).
AbelianGroup ext_group(const AbelianGroup& a, const AbelianGroup& b);

std::uint64_t euler_totient(std::uint64_t n);

/// |Aut(Z/q)| = phi(q). Throws std::invalid_argument for q < 2.
ExtOrder aut_cyclic_order(std::uint64_t q);

}  // namespace wedgeaut
