#include "wedgeaut/reducibility.hpp"

namespace wedgeaut {

bool hom_trivial_all_degrees(const SpaceDesc& a, const SpaceDesc& b) {
    const auto ha = homology(a);
    const auto hb = homology(b);
    for (const auto& [degree, group] : ha) {
        auto it = hb.find(degree);
        if (it != hb.end() && !hom_group(group, it->second).is_trivial()) {
            return false;
        }
    }
    return true;
}

std::vector<PairCheck> ReducibilityResult::failing() const {
    std::vector<PairCheck> out;
    for (const auto& p : pairs) {
        if (!p.certified()) {
            out.push_back(p);
        }
    }
    return out;
}

ReducibilityResult check_reducible(const WedgeInput& w) {
    ReducibilityResult result;
    result.certified = true;
    const auto& s = w.summands;
    for (std::size_t r = 0; r < s.size(); ++r) {
        for (std::size_t t = r + 1; t < s.size(); ++t) {
            PairCheck pair{r, t, std::nullopt};
            if (hom_trivial_all_degrees(s[r].space(), s[t].space())) {
                pair.certified_by = std::make_pair(r, t);
            } else if (hom_trivial_all_degrees(s[t].space(), s[r].space())) {
                pair.certified_by = std::make_pair(t, r);
            } else {
                result.certified = false;
            }
            result.pairs.push_back(pair);
        }
    }
    return result;
}

std::string describe(const PairCheck& pair, const WedgeInput& w) {
    const auto& s = w.summands;
    const std::string label = "{" + std::to_string(pair.first + 1) + "," +
                              std::to_string(pair.second + 1) + "}";
    if (!pair.certified_by) {
        return label + ": Hom(H_*, H_*) is nonzero in both directions between " +
               s[pair.first].to_string() + " and " + s[pair.second].to_string();
    }
    const auto [from, to] = *pair.certified_by;
    return label + ": Hom(H_*(" + s[from].to_string() + "), H_*(" + s[to].to_string() + ")) = 0";
}

}  // namespace wedgeaut
