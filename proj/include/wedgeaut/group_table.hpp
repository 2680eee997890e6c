#pragma once

#include <compare>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wedgeaut/abelian_group.hpp"
#include "wedgeaut/ext_order.hpp"
#include "wedgeaut/space.hpp"

namespace wedgeaut {

/// Which rule produced an order. Rendered names are part of the report
/// formats.
enum class Rule {
    AutSphere,       // Aut(S^n) = Z/2
    AutMooreExt,     // 0 -> Ext(Z/q, pi_{n+1}) -> Aut(M(q,n)) -> Aut(Z/q) -> 1
    Vanishing,       // dim(source) <= conn(target)
    SphereBelow,     // pi_a(S^b), a < b
    SphereDegree,    // pi_n(S^n) = Z
    HopfInvariant,   // pi_{2b-1}(S^b), b even, contains Z
    StableStem,      // Freudenthal range
    Table,           // bundled or user table entry
    MissingEntry,    // no rule fired; answer is Unknown
};

std::string_view to_string(Rule rule);

struct InfiniteValue {
    friend bool operator==(const InfiniteValue&, const InfiniteValue&) = default;
};

/// A table value: a full group, "infinite", or an order without structure.
struct TableValue {
    std::variant<AbelianGroup, InfiniteValue, BigInt> v;

    ExtOrder order() const;
    const AbelianGroup* group() const { return std::get_if<AbelianGroup>(&v); }
    std::string to_string() const;
};

struct TableEntry {
    SpaceDesc source;
    SpaceDesc target;
    TableValue value;
    std::string note;
};

/// Mapping-set and homotopy-group data keyed by (source, target); the entry
/// (S^a, S^b) is pi_a(S^b). Immutable once built.
class GroupTable {
public:
    /// The data shipped with the library.
    static const GroupTable& bundled();

    /// Bundled data merged with a user table (JSON text). User entries
    /// override bundled entries with the same key; a user "stable_stems"
    /// array replaces the bundled one. Empty or whitespace-only text leaves
    /// the bundled table unchanged. Throws TableLoadError naming the entry.
    static GroupTable load_text(std::string_view json_text);

    /// As load_text, reading the file at `path`.
    static GroupTable load_file(const std::filesystem::path& path);

    const TableEntry* find(const SpaceDesc& source, const SpaceDesc& target) const;

    /// Stems 0..S; stem 0 is always Z.
    const std::vector<AbelianGroup>& stable_stems() const noexcept { return stems_; }

    /// Entries that contradict a closed-form rule that takes precedence over
    /// them (vanishing, sphere rules, stable range).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }

    std::size_t size() const noexcept { return entries_.size(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

private:
    GroupTable() = default;

    void merge(std::string_view json_text, std::string_view origin);
    void self_check();

    std::map<std::pair<SpaceDesc, SpaceDesc>, TableEntry> entries_;
    std::vector<AbelianGroup> stems_;
    std::vector<std::string> warnings_;
};

/// An order together with the rule that decided it. For MissingEntry,
/// `missing` names the (source, target) entry that would resolve it.
struct OrderAnswer {
    ExtOrder order;
    Rule rule;
    std::optional<std::pair<SpaceDesc, SpaceDesc>> missing;
};

/// |pi_a(S^b)|, rules in order: a < b -> 1; a = b -> infinite; b even and
/// a = 2b - 1 -> infinite; stable range b >= (a-b)+2 with a stem in the
/// table -> stem order; table entry; otherwise unknown.
OrderAnswer sphere_pi_order(int a, int b, const GroupTable& table);

/// |[source, target]|: vanishing when dim(source) <= conn(target); sphere
/// rules; table lookup; otherwise unknown. Source must be a sphere or a
/// Moore space (UnsupportedSpaceError otherwise).
OrderAnswer mapping_group_order(const SpaceDesc& source, const SpaceDesc& target,
                                const GroupTable& table);

/// |Aut(Sigma X)|. Spheres give 2. For M(q,n) the table must hold
/// pi_{n+1}(M(q,n)) as a group G; the order is |Ext(Z/q, G)| * phi(q).
OrderAnswer summand_aut_order(const SuspendedSummand& s, const GroupTable& table);

}  // namespace wedgeaut
