#include "wedgeaut/hall_basis.hpp"

#include <stdexcept>

namespace wedgeaut {

namespace {

int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            result = -result;
        }
    }
    if (n > 1) {
        result = -result;
    }
    return result;
}

}  // namespace

HallBasis::HallBasis(int generators, int max_weight)
    : HallBasis(generators, max_weight, [](std::span<const int>) { return true; }) {}

HallBasis::HallBasis(int generators, int max_weight, const MultidegreeFilter& keep)
    : generators_(generators), max_weight_(max_weight) {
    if (generators < 1 || max_weight < 1) {
        throw std::invalid_argument("HallBasis needs at least one generator and weight bound >= 1");
    }
    const auto k = static_cast<std::size_t>(generators);

    // weight_begin[w] is the first index of weight w; elements are appended
    // weight by weight, so [weight_begin[w], weight_begin[w+1]) is weight w.
    std::vector<std::size_t> weight_begin(static_cast<std::size_t>(max_weight) + 2, 0);

    weight_begin[1] = 0;
    for (int g = 0; g < generators; ++g) {
        Commutator leaf;
        leaf.generator = g;
        leaf.multidegree.assign(k, 0);
        leaf.multidegree[static_cast<std::size_t>(g)] = 1;
        if (keep(leaf.multidegree)) {
            elements_.push_back(std::move(leaf));
        }
    }
    weight_begin[2] = elements_.size();

    std::vector<int> md(k);
    for (int w = 2; w <= max_weight; ++w) {
        // a < b forces wt(a) <= wt(b), so a ranges over weights <= w/2.
        const std::size_t a_end = weight_begin[static_cast<std::size_t>(w / 2) + 1];
        for (std::size_t a = 0; a < a_end; ++a) {
            const int wa = elements_[a].weight;
            const auto wb = static_cast<std::size_t>(w - wa);
            const std::size_t b_begin = std::max(weight_begin[wb], a + 1);
            const std::size_t b_end = weight_begin[wb + 1];
            for (std::size_t b = b_begin; b < b_end; ++b) {
                const Commutator& cb = elements_[b];
                if (!cb.is_leaf() && cb.left > a) {
                    continue;
                }
                for (std::size_t t = 0; t < k; ++t) {
                    md[t] = elements_[a].multidegree[t] + cb.multidegree[t];
                }
                if (!keep(md)) {
                    continue;
                }
                Commutator c;
                c.left = a;
                c.right = b;
                c.weight = w;
                c.multidegree = md;
                elements_.push_back(std::move(c));
            }
        }
        weight_begin[static_cast<std::size_t>(w) + 1] = elements_.size();
    }
}

std::string HallBasis::render(std::size_t i) const {
    const Commutator& c = elements_.at(i);
    if (c.is_leaf()) {
        return "z" + std::to_string(c.generator + 1);
    }
    return "[" + render(c.left) + "," + render(c.right) + "]";
}

BigInt count_by_weight(int k, int w) {
    if (k < 1 || w < 1) {
        throw std::invalid_argument("count_by_weight needs k >= 1 and w >= 1");
    }
    BigInt sum = 0;
    for (int d = 1; d <= w; ++d) {
        if (w % d != 0) {
            continue;
        }
        const int mu = mobius(d);
        if (mu == 0) {
            continue;
        }
        BigInt term = boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(w / d));
        sum += mu > 0 ? term : BigInt(-term);
    }
    return sum / w;
}

}  // namespace wedgeaut
