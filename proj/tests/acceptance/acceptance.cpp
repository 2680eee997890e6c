// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "wedgeaut/abelian_group.hpp"
#include "wedgeaut/cli.hpp"
#include "wedgeaut/engine.hpp"
#include "wedgeaut/group_table.hpp"
#include "wedgeaut/hall_basis.hpp"
#include "wedgeaut/report.hpp"
#include "wedgeaut/space.hpp"

using namespace wedgeaut;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    std::string summary;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

FactorReport compute(const std::string& expr, const EngineOptions& options = {}) {
    return aut_order(parse_wedge(expr), GroupTable::bundled(), options);
}

Outcome exact_total(const std::string& expr, const ExtOrder& expected) {
    Outcome o;
    const auto r = compute(expr);
    if (!(r.total == expected)) o.fail("total " + r.total.to_string() + ", expected " + expected.to_string());
    return o;
}

Outcome criterion1() {
    Outcome o = exact_total("S2 v M(2,2)", ExtOrder::finite(32));
    const auto j = to_json(compute("S2 v M(2,2)"), false);
    if (j["reducibility"]["mode"] != "checked") o.fail("mode " + j["reducibility"]["mode"].dump());
    return o;
}

Outcome criterion6() {
    Outcome o = exact_total("S6 v S5 v S3", ExtOrder::finite(384));
    const auto j = to_json(compute("S6 v S5 v S3"), false);
    if (j["notes"].empty()) o.fail("notes array is empty");
    return o;
}

Outcome criterion7() {
    Outcome o;
    for (int k = 1; k <= 4; ++k) {
        const HallBasis basis(k, 6);
        std::vector<long> per_weight(7, 0);
        for (const auto& c : basis) ++per_weight[static_cast<std::size_t>(c.weight)];
        for (int w = 1; w <= 6; ++w) {
            const long brute = oracle::lyndon_count(k, w);
            const long listed = per_weight[static_cast<std::size_t>(w)];
            if (listed != brute || count_by_weight(k, w) != brute) {
                std::ostringstream msg;
                msg << "k=" << k << " w=" << w << ": basis " << listed << ", formula "
                    << count_by_weight(k, w) << ", lyndon " << brute;
                o.fail(msg.str());
            }
        }
    }
    return o;
}

std::vector<std::vector<std::string>> random_wedges() {
    std::vector<std::string> pool;
    for (int n = 2; n <= 9; ++n) pool.push_back("S" + std::to_string(n));
    for (int n = 2; n <= 5; ++n) pool.push_back("M(2," + std::to_string(n) + ")");
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<int> size(2, 4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::vector<std::vector<std::string>> out;
    for (int i = 0; i < 100; ++i) {
        std::vector<std::string> w(static_cast<std::size_t>(size(rng)));
        for (auto& s : w) s = pool[pick(rng)];
        out.push_back(std::move(w));
    }
    return out;
}

std::string join(const std::vector<std::string>& parts) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " v " : "") + parts[i];
    return s;
}

Outcome criterion8(const std::vector<std::vector<std::string>>& wedges) {
    Outcome o;
    EngineOptions opts;
    opts.assume_reducible = true;
    int finite = 0, infinite = 0;
    for (const auto& w : wedges) {
        const ExtOrder reference = compute(join(w), opts).total;
        finite += reference.is_finite();
        infinite += reference.is_infinite();
        std::vector<std::size_t> perm(w.size());
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin(), perm.end())) {
            std::vector<std::string> shuffled;
            for (auto i : perm) shuffled.push_back(w[i]);
            const ExtOrder t = compute(join(shuffled), opts).total;
            if (!(t == reference)) {
                o.fail(join(w) + " gives " + reference.to_string() + " but " + join(shuffled) + " gives " +
                       t.to_string());
            }
        }
    }
    o.summary = std::to_string(finite) + " finite, " + std::to_string(infinite) + " infinite, " +
                std::to_string(static_cast<int>(wedges.size()) - finite - infinite) + " unknown";
    return o;
}

Outcome criterion9(const std::vector<std::vector<std::string>>& wedges) {
    Outcome o;
    for (const auto& w : wedges) {
        const auto input = parse_wedge(join(w));
        EngineOptions base;
        base.assume_reducible = true;
        EngineOptions extended = base;
        extended.max_weight = max_weight_bound(input) + 3;
        const auto a = aut_order(input, GroupTable::bundled(), base).total;
        const auto b = aut_order(input, GroupTable::bundled(), extended).total;
        if (!(a == b)) o.fail(join(w) + ": " + a.to_string() + " at bound, " + b.to_string() + " at bound+3");
    }
    return o;
}

Outcome criterion10() {
    Outcome o;
    int checked = 0;
    for (int n = 3; n <= 9; ++n) {
        for (int k = 0; k <= n - 2; ++k) {
            for (int a = n; a <= n + k; ++a) {
                for (int b = n; b <= n + k; ++b) {
                    EngineOptions opts;
                    opts.prune = false;
                    opts.assume_reducible = true;
                    const std::string expr = "S" + std::to_string(a) + " v S" + std::to_string(b);
                    const auto r = compute(expr, opts);
                    for (const auto& f : r.factors) {
                        if (f.weight < 2) continue;
                        ++checked;
                        if (!f.order.is_one()) o.fail(expr + ": " + f.commutator + " has order " + f.order.to_string());
                    }
                }
            }
        }
    }
    if (checked == 0) o.fail("no weight >= 2 factors were examined");
    return o;
}

Outcome criterion11() {
    Outcome o;
    std::ostringstream out, err;
    const std::vector<std::string> args{"S3 v S3"};
    const int code = cli::run(args, out, err);
    if (code != 3) o.fail("exit code " + std::to_string(code));
    if (!out.str().empty()) o.fail("stdout not empty");
    return o;
}

oracle::FiniteGroup as_finite(const AbelianGroup& g) {
    oracle::FiniteGroup f;
    for (auto m : g.torsion()) f.moduli.push_back(static_cast<int>(m));
    return f;
}

AbelianGroup as_group(const oracle::FiniteGroup& f, unsigned rank = 0) {
    std::vector<std::uint64_t> t(f.moduli.begin(), f.moduli.end());
    return AbelianGroup(rank, t);
}

Outcome criterion12() {
    Outcome o;
    constexpr int kLimit = 144;
    std::vector<oracle::FiniteGroup> groups;
    for (int n = 1; n <= 12; ++n) {
        for (auto& g : oracle::groups_of_order(n)) groups.push_back(g);
    }
    for (const auto& a : groups) {
        const auto ga = as_group(a);
        for (const auto& b : groups) {
            const auto gb = as_group(b);
            const auto hom = hom_group(ga, gb);
            const auto ext = ext_group(ga, gb);
            if (!hom.is_finite() || oracle::signature_of(as_finite(hom), kLimit) != oracle::hom_signature(a, b, kLimit)) {
                o.fail("Hom(" + ga.to_string() + ", " + gb.to_string() + ") = " + hom.to_string());
            }
            if (!ext.is_finite() || oracle::signature_of(as_finite(ext), kLimit) != oracle::ext_signature(a, b, kLimit)) {
                o.fail("Ext(" + ga.to_string() + ", " + gb.to_string() + ") = " + ext.to_string());
            }
        }

        // Rank-1 cases. Hom(A, Z) = 0, Ext(Z, A) = 0, Hom(Z, A) = A, and
        // Ext(A, Z) = Hom(A, Q/Z), which is Hom(A, Z/|A|) for finite A.
        const auto z = AbelianGroup::integers(1);
        if (!hom_group(ga, z).is_trivial()) o.fail("Hom(" + ga.to_string() + ", Z) nonzero");
        if (!ext_group(z, ga).is_trivial()) o.fail("Ext(Z, " + ga.to_string() + ") nonzero");
        const auto hz = hom_group(z, ga);
        if (!hz.is_finite() || oracle::signature_of(as_finite(hz), kLimit) != oracle::signature_of(a, kLimit)) {
            o.fail("Hom(Z, " + ga.to_string() + ") = " + hz.to_string());
        }
        const auto ez = ext_group(ga, z);
        const oracle::FiniteGroup qz{{a.order()}};
        const auto expected = a.order() == 1 ? oracle::signature_of(a, kLimit) : oracle::hom_signature(a, qz, kLimit);
        if (!ez.is_finite() || oracle::signature_of(as_finite(ez), kLimit) != expected) {
            o.fail("Ext(" + ga.to_string() + ", Z) = " + ez.to_string());
        }
    }
    // Free summands mixed with torsion.
    const auto zz = AbelianGroup::parse("Z^2 + Z/4");
    if (hom_group(zz, AbelianGroup::parse("Z + Z/6")) != AbelianGroup::parse("Z^2 + Z/2 + Z/6 + Z/6")) {
        o.fail("Hom(Z^2 + Z/4, Z + Z/6) = " + hom_group(zz, AbelianGroup::parse("Z + Z/6")).to_string());
    }
    if (ext_group(zz, AbelianGroup::parse("Z + Z/6")) != AbelianGroup::parse("Z/2 + Z/4")) {
        o.fail("Ext(Z^2 + Z/4, Z + Z/6) = " + ext_group(zz, AbelianGroup::parse("Z + Z/6")).to_string());
    }
    return o;
}

}  // namespace

int main() {
    const auto wedges = random_wedges();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"S2 v M(2,2) has order 32, reducibility checked", criterion1},
        {"S3 v M(2,2) has order 32", [] { return exact_total("S3 v M(2,2)", ExtOrder::finite(32)); }},
        {"S3 v S2 has infinite order", [] { return exact_total("S3 v S2", ExtOrder::infinite()); }},
        {"S4 v S3 has order 8", [] { return exact_total("S4 v S3", ExtOrder::finite(8)); }},
        {"S12 v S11 v S7 has order 16", [] { return exact_total("S12 v S11 v S7", ExtOrder::finite(16)); }},
        {"S6 v S5 v S3 has order 384 with notes", criterion6},
        {"basic commutator counts match Lyndon words, k <= 4, w <= 6", criterion7},
        {"totals invariant under summand permutation", [&] { return criterion8(wedges); }},
        {"totals unchanged at bound + 3", [&] { return criterion9(wedges); }},
        {"weight >= 2 factors trivial in the metastable sphere range", criterion10},
        {"S3 v S3 rejected by the reducibility gate", criterion11},
        {"Hom and Ext match exhaustive counting", criterion12},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first;
        if (!o.ok) std::cout << " (" << o.detail << ")";
        else if (!o.summary.empty()) std::cout << " [" << o.summary << "]";
        std::cout << '\n';
        if (!o.ok) ++failures;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " passed\n";
    return failures == 0 ? 0 : 1;
}
