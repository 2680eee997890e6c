#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wedgeaut/errors.hpp"
#include "wedgeaut/ext_order.hpp"
#include "wedgeaut/group_table.hpp"
#include "wedgeaut/reducibility.hpp"
#include "wedgeaut/space.hpp"

namespace wedgeaut {

enum class FactorKind {
    AutSummand,         // Aut(Sigma X_j)
    Pair,               // [Sigma X_j, Sigma X_i], i != j
    HigherCommutator,   // [Sigma X_j, Sigma ^c B], wt(c) >= 2
};

std::string_view to_string(FactorKind kind);

struct Factor {
    FactorKind kind = FactorKind::AutSummand;
    std::size_t summand = 0;         // 0-based j
    std::string commutator;          // empty for AutSummand
    int weight = 0;                  // 0 for AutSummand
    std::optional<SpaceDesc> target; // empty for AutSummand
    std::optional<std::size_t> paired_with;  // i for Pair factors
    ExtOrder order;
    Rule rule = Rule::MissingEntry;
    std::optional<std::pair<SpaceDesc, SpaceDesc>> missing;
};

enum class ReducibilityMode { Checked, Assumed };

std::string_view to_string(ReducibilityMode mode);

/// Factorization of |Aut(Sigma X_1 v ... v Sigma X_k)|.
struct FactorReport {
    WedgeInput input;
    ReducibilityMode mode = ReducibilityMode::Checked;
    ReducibilityResult reducibility;
    int weight_bound = 0;
    /// Every evaluated factor, ordered by summand and then commutator order.
    std::vector<Factor> factors;
    /// Factors skipped without evaluation because connectivity alone kills
    /// them; each has order 1.
    BigInt pruned = 0;
    /// Product of every factor order.
    ExtOrder total;
    std::vector<std::string> notes;

    /// Evaluated factors of order 1 plus pruned ones.
    BigInt trivial_count() const;
};

/// Raised when reducibility cannot be certified and was not assumed.
class ReducibilityError : public Error {
public:
    ReducibilityError(const std::string& message, ReducibilityResult result)
        : Error(message), result_(std::move(result)) {}

    const ReducibilityResult& result() const noexcept { return result_; }

private:
    ReducibilityResult result_;
};

struct EngineOptions {
    /// Overrides max_weight_bound when set.
    std::optional<int> max_weight;
    bool assume_reducible = false;
    /// Skip commutators whose target connectivity already reaches every
    /// summand dimension. Disabling it evaluates every factor explicitly.
    bool prune = true;
};

/// max_j dim(Sigma X_j). Every commutator of larger weight only
/// contributes vanishing factors, since conn(Sigma ^c B) >= wt(c).
int max_weight_bound(const WedgeInput& w);

/// Computes the order as the product, over summands j, of |Aut(Sigma X_j)|
/// and |[Sigma X_j, Sigma ^c B]| for every basic commutator c != z_j up to
/// the weight bound. Weight-1 commutators yield every ordered pair i != j.
///
/// Throws InvalidInputError for an empty wedge or a bound < 1, and
/// ReducibilityError when reducibility is neither certified nor assumed.
FactorReport aut_order(const WedgeInput& w, const GroupTable& table,
                       const EngineOptions& options = {});

}  // namespace wedgeaut
