#include "wedgeaut/engine.hpp"

#include <algorithm>
#include <set>

#include "wedgeaut/hall_basis.hpp"
#include "wedgeaut/smash.hpp"

namespace wedgeaut {

namespace {

std::string bracket(const SpaceDesc& source, const SpaceDesc& target) {
    return "[" + source.to_string() + ", " + target.to_string() + "]";
}

std::vector<std::string> divergence_notes(const FactorReport& report) {
    std::vector<std::string> notes;
    const auto& s = report.input.summands;
    const bool all_spheres = std::all_of(s.begin(), s.end(), [](const SuspendedSummand& x) {
        return x.space().is_sphere();
    });
    int top_dim = 0;
    for (const auto& x : s) {
        top_dim = std::max(top_dim, x.space().dim());
    }

    for (const auto& f : report.factors) {
        if (f.kind != FactorKind::Pair || f.order.is_one()) {
            continue;
        }
        const std::size_t j = f.summand;
        const std::size_t i = *f.paired_with;
        const std::string name = bracket(s[j].space(), *f.target);
        if (j > i) {
            notes.push_back("ordered-pairs: " + name + " (summand " + std::to_string(j + 1) +
                            " into summand " + std::to_string(i + 1) + ", order " +
                            f.order.to_string() +
                            ") has source index above target index; a product over pairs "
                            "r < s alone omits it, the per-summand decomposition includes it");
        }
        if (all_spheres && s.size() >= 3 && s[j].space().dim() < top_dim) {
            notes.push_back("sphere-formula: " + name + " (order " + f.order.to_string() +
                            ") has a source below the top-dimensional sphere; closed formulas "
                            "built only from pi_n of the top sphere omit it, the total includes it");
        }
    }
    return notes;
}

std::vector<std::string> missing_notes(const FactorReport& report) {
    std::vector<std::string> notes;
    std::set<std::pair<SpaceDesc, SpaceDesc>> seen;
    for (const auto& f : report.factors) {
        if (!f.missing || !seen.insert(*f.missing).second) {
            continue;
        }
        const auto& [source, target] = *f.missing;
        std::string note = "missing-entry: no data for " + bracket(source, target);
        if (f.kind == FactorKind::AutSummand) {
            note += " (needed as a group for Aut(" + target.to_string() + "))";
        }
        notes.push_back(std::move(note));
    }
    return notes;
}

}  // namespace

std::string_view to_string(FactorKind kind) {
    switch (kind) {
    case FactorKind::AutSummand:
        return "aut-summand";
    case FactorKind::Pair:
        return "weight-1-pair";
    case FactorKind::HigherCommutator:
        return "higher-commutator";
    }
    return "aut-summand";
}

std::string_view to_string(ReducibilityMode mode) {
    return mode == ReducibilityMode::Checked ? "checked" : "assumed";
}

BigInt FactorReport::trivial_count() const {
    BigInt n = pruned;
    for (const auto& f : factors) {
        if (f.order.is_one()) {
            ++n;
        }
    }
    return n;
}

int max_weight_bound(const WedgeInput& w) {
    int bound = 0;
    for (const auto& s : w.summands) {
        bound = std::max(bound, s.space().dim());
    }
    return bound;
}

FactorReport aut_order(const WedgeInput& w, const GroupTable& table, const EngineOptions& options) {
    if (w.summands.empty()) {
        throw InvalidInputError("the wedge needs at least one summand");
    }
    if (options.max_weight && *options.max_weight < 1) {
        throw InvalidInputError("the weight bound must be at least 1");
    }

    FactorReport report;
    report.input = w;
    report.reducibility = check_reducible(w);
    if (report.reducibility.certified) {
        report.mode = ReducibilityMode::Checked;
    } else if (options.assume_reducible) {
        report.mode = ReducibilityMode::Assumed;
    } else {
        std::string message = "reducibility could not be certified for " + w.to_string() + ":";
        for (const auto& p : report.reducibility.failing()) {
            message += "\n  pair " + describe(p, w);
        }
        throw ReducibilityError(message, report.reducibility);
    }

    const int k = static_cast<int>(w.size());
    report.weight_bound = options.max_weight.value_or(max_weight_bound(w));

    std::vector<SpaceDesc> desusps;
    for (const auto& s : w.summands) {
        desusps.push_back(s.desusp());
    }
    const int top_dim = max_weight_bound(w);

    HallBasis::MultidegreeFilter keep = [](std::span<const int>) { return true; };
    if (options.prune) {
        // conn(Sigma ^c B) is monotone in the multidegree, so this filter is
        // down-closed.
        keep = [&desusps, top_dim](std::span<const int> md) {
            return smash_power_conn(md, desusps) + 1 < top_dim;
        };
    }
    const HallBasis basis(k, report.weight_bound, keep);

    if (options.prune) {
        BigInt all = 0;
        for (int wt = 1; wt <= report.weight_bound; ++wt) {
            all += count_by_weight(k, wt);
        }
        // Pruned commutators all have weight >= 2, so each one stands for k
        // factors.
        report.pruned = (all - BigInt(basis.size())) * k;
    }

    std::vector<SpaceDesc> targets;
    targets.reserve(basis.size());
    for (const auto& c : basis) {
        targets.push_back(suspend(smash_power(c.multidegree, desusps)));
    }

    for (std::size_t j = 0; j < w.size(); ++j) {
        const auto& summand = w.summands[j];
        {
            const OrderAnswer a = summand_aut_order(summand, table);
            Factor f;
            f.kind = FactorKind::AutSummand;
            f.summand = j;
            f.order = a.order;
            f.rule = a.rule;
            f.missing = a.missing;
            report.factors.push_back(std::move(f));
        }
        for (std::size_t ci = 0; ci < basis.size(); ++ci) {
            const Commutator& c = basis[ci];
            if (c.is_leaf() && static_cast<std::size_t>(c.generator) == j) {
                continue;
            }
            const OrderAnswer a = mapping_group_order(summand.space(), targets[ci], table);
            Factor f;
            f.kind = c.is_leaf() ? FactorKind::Pair : FactorKind::HigherCommutator;
            f.summand = j;
            f.commutator = basis.render(ci);
            f.weight = c.weight;
            f.target = targets[ci];
            if (c.is_leaf()) {
                f.paired_with = static_cast<std::size_t>(c.generator);
            }
            f.order = a.order;
            f.rule = a.rule;
            f.missing = a.missing;
            report.factors.push_back(std::move(f));
        }
    }

    std::vector<ExtOrder> orders;
    orders.reserve(report.factors.size());
    for (const auto& f : report.factors) {
        orders.push_back(f.order);
    }
    report.total = product(orders);

    report.notes = divergence_notes(report);
    for (auto& n : missing_notes(report)) {
        report.notes.push_back(std::move(n));
    }
    return report;
}

}  // namespace wedgeaut
