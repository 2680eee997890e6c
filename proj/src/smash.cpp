#include "wedgeaut/smash.hpp"

#include "wedgeaut/errors.hpp"

namespace wedgeaut {

namespace {

void check_shapes(std::span<const int> multidegree, std::span<const SpaceDesc> desusps) {
    if (multidegree.size() != desusps.size()) {
        throw InvalidInputError("multidegree and factor list differ in length");
    }
    int total = 0;
    for (int m : multidegree) {
        if (m < 0) {
            throw InvalidInputError("negative multidegree entry");
        }
        total += m;
    }
    if (total == 0) {
        throw InvalidInputError("empty smash product (zero multidegree)");
    }
}

}  // namespace

SpaceDesc smash_power(std::span<const int> multidegree, std::span<const SpaceDesc> desusps) {
    check_shapes(multidegree, desusps);

    // Sigma^shift applied to a smash of M(q,1)'s (or a point-free sphere part).
    int shift = 0;
    std::vector<std::uint64_t> moduli;
    for (std::size_t t = 0; t < desusps.size(); ++t) {
        const int m = multidegree[t];
        if (m == 0) {
            continue;
        }
        const SpaceDesc& x = desusps[t];
        if (const auto* s = std::get_if<Sphere>(&x.kind())) {
            shift += m * s->n;
        } else if (const auto* mo = std::get_if<Moore>(&x.kind())) {
            shift += m * (mo->n - 1);
            moduli.insert(moduli.end(), static_cast<std::size_t>(m), mo->q);
        } else {
            throw UnsupportedSpaceError("cannot smash with " + x.to_string());
        }
    }

    if (moduli.empty()) {
        return SpaceDesc::sphere(shift);
    }
    if (moduli.size() == 1) {
        return SpaceDesc::moore(moduli.front(), shift + 1);
    }
    return SpaceDesc::generic(shift, std::move(moduli));
}

int smash_power_conn(std::span<const int> multidegree, std::span<const SpaceDesc> desusps) {
    check_shapes(multidegree, desusps);
    int conn = -1;
    for (std::size_t t = 0; t < desusps.size(); ++t) {
        conn += multidegree[t] * (desusps[t].conn() + 1);
    }
    return conn;
}

}  // namespace wedgeaut
