#include "wedgeaut/report.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace wedgeaut {

namespace {

using nlohmann::ordered_json;

ordered_json count_to_json(const BigInt& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) {
        return n.convert_to<std::uint64_t>();
    }
    return n.str();
}

bool listed(const Factor& f, bool explain) { return explain || !f.order.is_one(); }

BigInt omitted(const FactorReport& report, bool explain) {
    return explain ? report.pruned : report.trivial_count();
}

std::string factor_name(const FactorReport& report, const Factor& f) {
    const std::string source = report.input.summands[f.summand].to_string();
    if (f.kind == FactorKind::AutSummand) {
        return "Aut(" + source + ")";
    }
    return "[" + source + ", " + f.target->to_string() + "]";
}

}  // namespace

ordered_json order_to_json(const ExtOrder& order) {
    if (order.is_finite()) {
        ordered_json j;
        j["finite"] = count_to_json(order.value());
        return j;
    }
    return order.to_string();
}

ordered_json to_json(const FactorReport& report, bool explain) {
    ordered_json out;

    ordered_json input = ordered_json::array();
    for (const auto& s : report.input.summands) {
        input.push_back(s.to_string());
    }
    out["input"] = std::move(input);

    ordered_json pairs = ordered_json::array();
    for (const auto& p : report.reducibility.pairs) {
        ordered_json item;
        item["pair"] = {p.first + 1, p.second + 1};
        if (p.certified_by) {
            item["certified_by"] = {p.certified_by->first + 1, p.certified_by->second + 1};
        } else {
            item["certified_by"] = nullptr;
        }
        pairs.push_back(std::move(item));
    }
    ordered_json red;
    red["mode"] = std::string(to_string(report.mode));
    red["pairs"] = std::move(pairs);
    out["reducibility"] = std::move(red);

    out["total"] = order_to_json(report.total);

    ordered_json factors = ordered_json::array();
    for (const auto& f : report.factors) {
        if (!listed(f, explain)) {
            continue;
        }
        ordered_json item;
        item["kind"] = std::string(to_string(f.kind));
        item["summand"] = f.summand + 1;
        item["commutator"] = f.commutator.empty() ? ordered_json(nullptr) : ordered_json(f.commutator);
        item["target"] = f.target ? ordered_json(f.target->to_string()) : ordered_json(nullptr);
        item["order"] = order_to_json(f.order);
        item["rule"] = std::string(to_string(f.rule));
        factors.push_back(std::move(item));
    }
    out["factors"] = std::move(factors);
    out["omitted_trivial"] = count_to_json(omitted(report, explain));
    out["notes"] = report.notes;
    return out;
}

std::string render_text(const FactorReport& report, bool explain) {
    std::ostringstream os;
    os << "wedge: " << report.input.to_string() << "\n";
    os << "reducibility: " << to_string(report.mode);
    if (report.mode == ReducibilityMode::Checked) {
        os << " (sufficient condition: homology Hom vanishes in one direction for every pair)";
    } else {
        os << " (not certified by the homology criterion)";
    }
    os << "\n";
    for (const auto& p : report.reducibility.pairs) {
        os << "  pair " << describe(p, report.input) << "\n";
    }
    os << "weight bound: " << report.weight_bound << "\n";

    struct Row {
        std::string summand, commutator, name, order, rule;
    };
    std::vector<Row> rows;
    for (const auto& f : report.factors) {
        if (listed(f, explain)) {
            rows.push_back({std::to_string(f.summand + 1), f.commutator.empty() ? "-" : f.commutator,
                            factor_name(report, f), f.order.to_string(), std::string(to_string(f.rule))});
        }
    }
    std::size_t w_c = 10, w_n = 6, w_o = 5;
    for (const auto& r : rows) {
        w_c = std::max(w_c, r.commutator.size());
        w_n = std::max(w_n, r.name.size());
        w_o = std::max(w_o, r.order.size());
    }
    auto pad = [](const std::string& s, std::size_t w) {
        return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
    };
    os << "factors:\n";
    os << "  j  " << pad("commutator", w_c) << "  " << pad("factor", w_n) << "  " << pad("order", w_o)
       << "  rule\n";
    for (const auto& r : rows) {
        os << "  " << pad(r.summand, 2) << " " << pad(r.commutator, w_c) << "  " << pad(r.name, w_n)
           << "  " << pad(r.order, w_o) << "  " << r.rule << "\n";
    }
    os << "omitted trivial factors: " << omitted(report, explain).str() << "\n";
    os << "total: " << report.total.to_string() << "\n";
    if (!report.notes.empty()) {
        os << "notes:\n";
        for (const auto& n : report.notes) {
            os << "  - " << n << "\n";
        }
    }
    return os.str();
}

}  // namespace wedgeaut
