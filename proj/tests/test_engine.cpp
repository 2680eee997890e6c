#include <algorithm>
#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "wedgeaut/engine.hpp"
#include "wedgeaut/hall_basis.hpp"

using namespace wedgeaut;

namespace {

FactorReport run(const std::string& expr, EngineOptions options = {}) {
    return aut_order(parse_wedge(expr), GroupTable::bundled(), options);
}

std::vector<std::string> nontrivial(const FactorReport& r) {
    std::vector<std::string> out;
    for (const auto& f : r.factors) {
        if (f.order.is_one()) continue;
        out.push_back(std::string(to_string(f.kind)) + " " + std::to_string(f.summand + 1) + " " +
                      f.commutator + " " + (f.target ? f.target->to_string() : "") + " " +
                      f.order.to_string());
    }
    return out;
}

}  // namespace

TEST_CASE("max_weight_bound", "[engine]") {
    CHECK(max_weight_bound(parse_wedge("S2 v M(2,2)")) == 3);
    CHECK(max_weight_bound(parse_wedge("S12 v S11 v S7")) == 12);
    CHECK(max_weight_bound(parse_wedge("S5")) == 5);
}

TEST_CASE("S2 v M(2,2) factorization", "[engine]") {
    const auto r = run("S2 v M(2,2)");
    CHECK(r.total == ExtOrder::finite(32));
    CHECK(r.mode == ReducibilityMode::Checked);
    CHECK(nontrivial(r) == std::vector<std::string>{
                               "aut-summand 1   2",
                               "weight-1-pair 1 z2 M(2,2) 2",
                               "aut-summand 2   2",
                               "weight-1-pair 2 z1 S2 2",
                               "higher-commutator 2 [z1,z2] M(2,3) 2",
                           });
}

TEST_CASE("S3 v M(2,2) uses pi_3 = Z/4", "[engine]") {
    const auto r = run("S3 v M(2,2)");
    CHECK(r.total == ExtOrder::finite(32));
    CHECK(nontrivial(r) == std::vector<std::string>{
                               "aut-summand 1   2",
                               "weight-1-pair 1 z2 M(2,2) 4",
                               "aut-summand 2   2",
                               "weight-1-pair 2 z1 S3 2",
                           });
}

TEST_CASE("two-sphere wedges", "[engine]") {
    CHECK(run("S3 v S2").total == ExtOrder::infinite());
    CHECK(run("S4 v S3").total == ExtOrder::finite(8));
    CHECK(run("S3 v S4").total == ExtOrder::finite(8));
    CHECK(run("S7 v S4").total == ExtOrder::infinite());
    CHECK(run("S9 v S3").total == ExtOrder::unknown());
}

TEST_CASE("single summand", "[engine]") {
    const auto r = run("S5");
    CHECK(r.total == ExtOrder::finite(2));
    CHECK(r.factors.size() == 1);
    CHECK(run("M(2,2)").total == ExtOrder::finite(2));
    CHECK(run("M(3,4)").total == ExtOrder::unknown());
}

TEST_CASE("three spheres", "[engine]") {
    const auto r = run("S12 v S11 v S7");
    CHECK(r.total == ExtOrder::finite(16));

    const auto r2 = run("S6 v S5 v S3");
    CHECK(r2.total == ExtOrder::finite(384));
    CHECK_FALSE(r2.notes.empty());
    CHECK(std::any_of(r2.notes.begin(), r2.notes.end(),
                      [](const std::string& n) { return n.find("[S5, S3]") != std::string::npos; }));
}

TEST_CASE("ordered-pairs note fires for later-to-earlier factors", "[engine]") {
    const auto r = run("S3 v S4");
    REQUIRE(r.notes.size() == 1);
    CHECK(r.notes[0].rfind("ordered-pairs:", 0) == 0);
    CHECK(run("S4 v S3").notes.empty());
}

TEST_CASE("unknown totals pinpoint missing entries", "[engine]") {
    const auto r = run("S6 v M(5,4)");
    CHECK(r.total == ExtOrder::unknown());
    std::vector<std::string> missing;
    for (const auto& n : r.notes) {
        if (n.rfind("missing-entry:", 0) == 0) missing.push_back(n);
    }
    CHECK(missing.size() >= 2);
    CHECK(std::any_of(missing.begin(), missing.end(), [](const std::string& n) {
        return n.find("[S5, M(5,4)]") != std::string::npos && n.find("Aut(M(5,4))") != std::string::npos;
    }));
}

TEST_CASE("reducibility gate", "[engine]") {
    CHECK_THROWS_AS(run("S3 v S3"), ReducibilityError);
    try {
        run("S3 v S3");
    } catch (const ReducibilityError& e) {
        CHECK(e.result().failing().size() == 1);
    }
    EngineOptions assume;
    assume.assume_reducible = true;
    const auto r = run("S3 v S3", assume);
    CHECK(r.mode == ReducibilityMode::Assumed);
    CHECK(r.total == ExtOrder::infinite());
    CHECK_THROWS_AS(aut_order(WedgeInput{}, GroupTable::bundled()), InvalidInputError);
    EngineOptions zero;
    zero.max_weight = 0;
    CHECK_THROWS_AS(run("S2", zero), InvalidInputError);
}

TEST_CASE("two-summand factor shape", "[engine][property]") {
    const std::vector<std::string> pool{"S2", "S3", "S4", "S5", "S6", "M(2,2)", "M(2,3)", "M(2,4)"};
    EngineOptions opts;
    opts.assume_reducible = true;
    opts.prune = false;
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            const auto r = run(a + " v " + b, opts);
            const HallBasis basis(2, r.weight_bound);
            std::size_t aut = 0, pairs = 0, higher = 0;
            for (const auto& f : r.factors) {
                if (f.kind == FactorKind::AutSummand) ++aut;
                if (f.kind == FactorKind::Pair) {
                    ++pairs;
                    CHECK(f.paired_with != f.summand);
                }
                if (f.kind == FactorKind::HigherCommutator) ++higher;
            }
            CHECK(aut == 2);
            CHECK(pairs == 2);
            CHECK(higher == 2 * (basis.size() - 2));
        }
    }
}

TEST_CASE("totals are infinite/unknown exactly when a factor is", "[engine][property]") {
    const std::vector<std::string> pool{"S2", "S3", "S4", "S5", "S7", "S9", "M(2,2)", "M(2,3)"};
    EngineOptions opts;
    opts.assume_reducible = true;
    for (const auto& a : pool) {
        for (const auto& b : pool) {
            const auto r = run(a + " v " + b, opts);
            const bool any_inf = std::any_of(r.factors.begin(), r.factors.end(),
                                             [](const Factor& f) { return f.order.is_infinite(); });
            const bool any_unknown = std::any_of(r.factors.begin(), r.factors.end(),
                                                 [](const Factor& f) { return f.order.is_unknown(); });
            CHECK(r.total.is_infinite() == any_inf);
            CHECK(r.total.is_unknown() == (any_unknown && !any_inf));
        }
    }
}

TEST_CASE("pruning changes nothing but the evaluated factor count", "[engine][property]") {
    std::mt19937 rng(31);
    const std::vector<std::string> pool{"S2", "S3", "S4", "S5", "S6", "M(2,2)", "M(2,3)", "M(2,4)"};
    std::uniform_int_distribution<int> len(2, 3), pick(0, static_cast<int>(pool.size()) - 1);
    for (int iter = 0; iter < 40; ++iter) {
        std::string expr;
        const int k = len(rng);
        for (int i = 0; i < k; ++i) expr += (i ? " v " : "") + pool[static_cast<std::size_t>(pick(rng))];
        EngineOptions pruned;
        pruned.assume_reducible = true;
        EngineOptions full = pruned;
        full.prune = false;
        const auto a = run(expr, pruned);
        const auto b = run(expr, full);
        INFO(expr);
        CHECK(a.total == b.total);
        CHECK(nontrivial(a) == nontrivial(b));
        CHECK(a.trivial_count() == b.trivial_count());
        CHECK(BigInt(a.factors.size()) + a.pruned == BigInt(b.factors.size()));
    }
}

TEST_CASE("raising the weight bound keeps the total", "[engine][property]") {
    for (const auto* expr : {"S2 v M(2,2)", "S3 v M(2,2)", "S4 v S3", "S6 v S5 v S3", "S2 v S3 v M(2,3)"}) {
        EngineOptions base;
        base.assume_reducible = true;
        const auto r = run(expr, base);
        for (int extra = 1; extra <= 3; ++extra) {
            EngineOptions more = base;
            more.max_weight = r.weight_bound + extra;
            CHECK(run(expr, more).total == r.total);
            more.prune = false;
            CHECK(run(expr, more).total == r.total);
        }
    }
}

TEST_CASE("factor order is deterministic by summand then commutator", "[engine]") {
    const auto r = run("S6 v S5 v S3");
    std::size_t last = 0;
    for (const auto& f : r.factors) {
        CHECK(f.summand >= last);
        last = f.summand;
    }
    const auto again = run("S6 v S5 v S3");
    REQUIRE(again.factors.size() == r.factors.size());
    for (std::size_t i = 0; i < r.factors.size(); ++i) {
        CHECK(again.factors[i].commutator == r.factors[i].commutator);
    }
}
