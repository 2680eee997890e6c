#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wedgeaut/abelian_group.hpp"

namespace wedgeaut {

/// S^n, n >= 1.
struct Sphere {
    int n = 1;

    friend auto operator<=>(const Sphere&, const Sphere&) = default;
};

/// The Moore space M(Z/q, n): reduced homology Z/q in degree n only.
/// M(2,2) is the suspension of RP^2.
struct Moore {
    std::uint64_t q = 2;
    int n = 1;

    friend auto operator<=>(const Moore&, const Moore&) = default;
};

/// Smash of two or more Moore spaces, kept only up to connectivity and
/// dimension. Stored in the normal form Sigma^s(M(q1,1) ^ ... ^ M(qr,1)),
/// with the moduli sorted, since S^d ^ X = Sigma^d X and
/// M(q,n) = Sigma^(n-1) M(q,1).
struct GenericSmash {
    int suspensions = 0;
    std::vector<std::uint64_t> moduli;

    friend auto operator<=>(const GenericSmash&, const GenericSmash&) = default;
};

/// Homotopy-type descriptor.
///
/// Connectivity uses the additive formula conn(A ^ B) = conn A + conn B + 1
/// as an equality. In general it is only a lower bound; it is attained for
/// spheres and Moore spaces and their smashes, except smashes of Moore
/// spaces with coprime moduli, which are contractible. Only the lower-bound
/// direction is relied on (for vanishing).
class SpaceDesc {
public:
    using Variant = std::variant<Sphere, Moore, GenericSmash>;

    /// Throws std::invalid_argument on out-of-range parameters.
    static SpaceDesc sphere(int n);
    static SpaceDesc moore(std::uint64_t q, int n);
    static SpaceDesc generic(int suspensions, std::vector<std::uint64_t> moduli);

    const Variant& kind() const noexcept { return v_; }
    bool is_sphere() const noexcept { return std::holds_alternative<Sphere>(v_); }
    bool is_moore() const noexcept { return std::holds_alternative<Moore>(v_); }
    bool is_generic() const noexcept { return std::holds_alternative<GenericSmash>(v_); }

    /// Largest c such that the space is c-connected.
    int conn() const;
    int dim() const;

    /// "S4", "M(2,3)", "Sigma^1(M(2,1)^M(2,1))".
    std::string to_string() const;

    friend auto operator<=>(const SpaceDesc&, const SpaceDesc&) = default;
    friend bool operator==(const SpaceDesc&, const SpaceDesc&) = default;

private:
    explicit SpaceDesc(Variant v) : v_(std::move(v)) {}

    Variant v_;
};

/// Parses any canonical rendering produced by SpaceDesc::to_string,
/// whitespace-insensitively. Throws ParseError.
SpaceDesc parse_space(std::string_view text);

/// Sigma: raises connectivity and dimension by one.
SpaceDesc suspend(const SpaceDesc& s);

/// Reduced integral homology, nonzero degrees only. Throws
/// UnsupportedSpaceError for GenericSmash.
std::map<int, AbelianGroup> homology(const SpaceDesc& s);

/// A simply connected suspension Sigma X with X recorded.
class SuspendedSummand {
public:
    /// Accepts Sphere(n >= 2) or Moore(q, n >= 2). Throws
    /// NotSimplyConnectedError for S1 / M(q,1) and UnsupportedSpaceError for
    /// GenericSmash.
    explicit SuspendedSummand(SpaceDesc space);

    const SpaceDesc& space() const noexcept { return space_; }
    const SpaceDesc& desusp() const noexcept { return desusp_; }
    std::string to_string() const { return space_.to_string(); }

    friend bool operator==(const SuspendedSummand&, const SuspendedSummand&) = default;

private:
    SpaceDesc space_;
    SpaceDesc desusp_;
};

/// Grammar "S<n>" (n >= 2) or "M(<q>,<n>)" (q >= 2, n >= 2), whitespace
/// ignored. `offset` shifts reported error positions, for use inside a
/// larger expression.
SuspendedSummand parse_summand(std::string_view text, std::size_t offset = 0);

/// The wedge Sigma X_1 v ... v Sigma X_k, k >= 1. Order is kept for
/// reporting only.
struct WedgeInput {
    std::vector<SuspendedSummand> summands;

    std::size_t size() const noexcept { return summands.size(); }
    std::string to_string() const;
};

/// Grammar: summand ("v" summand)*. Throws ParseError (with the offset into
/// `expr`) or NotSimplyConnectedError.
WedgeInput parse_wedge(std::string_view expr);

}  // namespace wedgeaut
