#include "wedgeaut/group_table.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wedgeaut/errors.hpp"

namespace wedgeaut {

namespace detail {
extern const std::string_view kBundledTableJson;
}

namespace {

using nlohmann::json;

bool is_blank(std::string_view text) {
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

/// Rules (1)-(4) of sphere_pi_order, which take precedence over the table.
std::optional<OrderAnswer> closed_sphere_rule(int a, int b, const std::vector<AbelianGroup>& stems) {
    if (a < b) {
        return OrderAnswer{ExtOrder::one(), Rule::SphereBelow, std::nullopt};
    }
    if (a == b) {
        return OrderAnswer{ExtOrder::infinite(), Rule::SphereDegree, std::nullopt};
    }
    if (b % 2 == 0 && a == 2 * b - 1) {
        return OrderAnswer{ExtOrder::infinite(), Rule::HopfInvariant, std::nullopt};
    }
    const int stem = a - b;
    if (b >= stem + 2 && static_cast<std::size_t>(stem) < stems.size()) {
        return OrderAnswer{group_order(stems[static_cast<std::size_t>(stem)]), Rule::StableStem,
                           std::nullopt};
    }
    return std::nullopt;
}

std::string describe(std::string_view origin, std::size_t index, const json& item) {
    std::string out = std::string(origin) + " entry #" + std::to_string(index);
    if (item.is_object()) {
        auto field = [&item](const char* key) -> std::string {
            auto it = item.find(key);
            return it != item.end() && it->is_string() ? it->get<std::string>() : "?";
        };
        out += " (source \"" + field("source") + "\", target \"" + field("target") + "\")";
    }
    return out;
}

SpaceDesc parse_key(const json& item, const char* key, const std::string& where) {
    auto it = item.find(key);
    if (it == item.end() || !it->is_string()) {
        throw TableLoadError(where + ": missing string field \"" + key + "\"");
    }
    try {
        return parse_space(it->get<std::string>());
    } catch (const ParseError& e) {
        throw TableLoadError(where + ": unrecognized " + key + " key: " + e.what());
    }
}

TableValue parse_value(const json& item, const std::string& where) {
    const bool has_group = item.contains("group");
    const bool has_order = item.contains("order");
    const bool has_infinite = item.contains("infinite");
    if (int(has_group) + int(has_order) + int(has_infinite) != 1) {
        throw TableLoadError(where + ": exactly one of \"group\", \"order\", \"infinite\" is required");
    }
    if (has_group) {
        const json& g = item.at("group");
        if (!g.is_string()) {
            throw TableLoadError(where + ": \"group\" must be a string");
        }
        try {
            return TableValue{AbelianGroup::parse(g.get<std::string>())};
        } catch (const ParseError& e) {
            throw TableLoadError(where + ": " + e.what());
        }
    }
    if (has_order) {
        const json& o = item.at("order");
        if (!o.is_number_unsigned() || o.get<std::uint64_t>() < 1) {
            throw TableLoadError(where + ": \"order\" must be an integer >= 1");
        }
        return TableValue{BigInt(o.get<std::uint64_t>())};
    }
    const json& inf = item.at("infinite");
    if (!inf.is_boolean() || !inf.get<bool>()) {
        throw TableLoadError(where + ": \"infinite\" must be true");
    }
    return TableValue{InfiniteValue{}};
}

}  // namespace

std::string_view to_string(Rule rule) {
    switch (rule) {
    case Rule::AutSphere:
        return "aut-sphere";
    case Rule::AutMooreExt:
        return "aut-moore-ext";
    case Rule::Vanishing:
        return "vanishing";
    case Rule::SphereBelow:
        return "sphere-below";
    case Rule::SphereDegree:
        return "sphere-degree";
    case Rule::HopfInvariant:
        return "hopf-invariant";
    case Rule::StableStem:
        return "stable-stem";
    case Rule::Table:
        return "table";
    case Rule::MissingEntry:
        return "missing-entry";
    }
    return "missing-entry";
}

ExtOrder TableValue::order() const {
    if (const auto* g = std::get_if<AbelianGroup>(&v)) {
        return group_order(*g);
    }
    if (std::holds_alternative<InfiniteValue>(v)) {
        return ExtOrder::infinite();
    }
    return ExtOrder::finite(std::get<BigInt>(v));
}

std::string TableValue::to_string() const {
    if (const auto* g = std::get_if<AbelianGroup>(&v)) {
        return g->to_string();
    }
    if (std::holds_alternative<InfiniteValue>(v)) {
        return "infinite";
    }
    return "order " + std::get<BigInt>(v).str();
}

const GroupTable& GroupTable::bundled() {
    static const GroupTable table = [] {
        GroupTable t;
        t.merge(detail::kBundledTableJson, "bundled table");
        t.self_check();
        return t;
    }();
    return table;
}

GroupTable GroupTable::load_text(std::string_view json_text) {
    GroupTable t = bundled();
    if (is_blank(json_text)) {
        return t;
    }
    t.warnings_.clear();
    t.merge(json_text, "user table");
    t.self_check();
    return t;
}

GroupTable GroupTable::load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw TableLoadError("cannot open table file " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_text(buf.str());
}

void GroupTable::merge(std::string_view json_text, std::string_view origin) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw TableLoadError(std::string(origin) + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object()) {
        throw TableLoadError(std::string(origin) + ": top level must be a JSON object");
    }
    for (const auto& [key, value] : doc.items()) {
        if (key != "version" && key != "entries" && key != "stable_stems" && key != "description") {
            throw TableLoadError(std::string(origin) + ": unknown top-level field \"" + key + "\"");
        }
    }

    if (auto it = doc.find("stable_stems"); it != doc.end()) {
        if (!it->is_array() || it->empty()) {
            throw TableLoadError(std::string(origin) + ": \"stable_stems\" must be a nonempty array");
        }
        std::vector<AbelianGroup> stems;
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& s = (*it)[i];
            const std::string where = std::string(origin) + " stable stem " + std::to_string(i);
            if (!s.is_string()) {
                throw TableLoadError(where + ": must be a group string");
            }
            try {
                stems.push_back(AbelianGroup::parse(s.get<std::string>()));
            } catch (const ParseError& e) {
                throw TableLoadError(where + ": " + e.what());
            }
        }
        if (stems.front() != AbelianGroup::integers()) {
            throw TableLoadError(std::string(origin) + ": stable stem 0 must be Z");
        }
        stems_ = std::move(stems);
    }

    if (auto it = doc.find("entries"); it != doc.end()) {
        if (!it->is_array()) {
            throw TableLoadError(std::string(origin) + ": \"entries\" must be an array");
        }
        for (std::size_t i = 0; i < it->size(); ++i) {
            const json& item = (*it)[i];
            const std::string where = describe(origin, i, item);
            if (!item.is_object()) {
                throw TableLoadError(where + ": entry must be an object");
            }
            for (const auto& [key, value] : item.items()) {
                if (key != "source" && key != "target" && key != "group" && key != "order" &&
                    key != "infinite" && key != "note") {
                    throw TableLoadError(where + ": unknown field \"" + key + "\"");
                }
            }
            TableEntry entry{parse_key(item, "source", where), parse_key(item, "target", where),
                             parse_value(item, where), item.value("note", std::string{})};
            if (entry.source.is_generic()) {
                throw TableLoadError(where + ": source must be a sphere or Moore space");
            }
            auto key = std::make_pair(entry.source, entry.target);
            entries_.insert_or_assign(std::move(key), std::move(entry));
        }
    }

    if (stems_.empty()) {
        throw TableLoadError(std::string(origin) + ": no stable stems defined");
    }
}

void GroupTable::self_check() {
    for (const auto& [key, entry] : entries_) {
        const std::string label =
            "entry " + entry.source.to_string() + " -> " + entry.target.to_string();
        const ExtOrder stored = entry.value.order();
        if (entry.source.dim() <= entry.target.conn()) {
            if (!stored.is_one()) {
                warnings_.push_back(label + " has order " + stored.to_string() +
                                    " but the map set vanishes by connectivity; the entry is ignored");
            }
            continue;
        }
        const auto* a = std::get_if<Sphere>(&entry.source.kind());
        const auto* b = std::get_if<Sphere>(&entry.target.kind());
        if (a == nullptr || b == nullptr) {
            continue;
        }
        if (auto closed = closed_sphere_rule(a->n, b->n, stems_); closed && !(closed->order == stored)) {
            warnings_.push_back(label + " has order " + stored.to_string() + " but the " +
                                std::string(to_string(closed->rule)) + " rule gives " +
                                closed->order.to_string() + "; the entry is ignored");
        }
    }
}

const TableEntry* GroupTable::find(const SpaceDesc& source, const SpaceDesc& target) const {
    auto it = entries_.find(std::make_pair(source, target));
    return it == entries_.end() ? nullptr : &it->second;
}

OrderAnswer sphere_pi_order(int a, int b, const GroupTable& table) {
    if (auto closed = closed_sphere_rule(a, b, table.stable_stems())) {
        return *closed;
    }
    const SpaceDesc source = SpaceDesc::sphere(a);
    const SpaceDesc target = SpaceDesc::sphere(b);
    if (const TableEntry* e = table.find(source, target)) {
        return {e->value.order(), Rule::Table, std::nullopt};
    }
    return {ExtOrder::unknown(), Rule::MissingEntry, std::make_pair(source, target)};
}

OrderAnswer mapping_group_order(const SpaceDesc& source, const SpaceDesc& target,
                                const GroupTable& table) {
    if (source.is_generic()) {
        throw UnsupportedSpaceError("mapping source must be a sphere or Moore space, got " +
                                    source.to_string());
    }
    if (source.dim() <= target.conn()) {
        return {ExtOrder::one(), Rule::Vanishing, std::nullopt};
    }
    const auto* a = std::get_if<Sphere>(&source.kind());
    const auto* b = std::get_if<Sphere>(&target.kind());
    if (a != nullptr && b != nullptr) {
        return sphere_pi_order(a->n, b->n, table);
    }
    if (const TableEntry* e = table.find(source, target)) {
        return {e->value.order(), Rule::Table, std::nullopt};
    }
    return {ExtOrder::unknown(), Rule::MissingEntry, std::make_pair(source, target)};
}

OrderAnswer summand_aut_order(const SuspendedSummand& s, const GroupTable& table) {
    if (s.space().is_sphere()) {
        return {ExtOrder::finite(2), Rule::AutSphere, std::nullopt};
    }
    const auto& m = std::get<Moore>(s.space().kind());
    const SpaceDesc probe = SpaceDesc::sphere(m.n + 1);
    const TableEntry* e = table.find(probe, s.space());
    if (e == nullptr || e->value.group() == nullptr) {
        return {ExtOrder::unknown(), Rule::MissingEntry, std::make_pair(probe, s.space())};
    }
    const AbelianGroup ext = ext_group(AbelianGroup::cyclic(m.q), *e->value.group());
    return {group_order(ext) * aut_cyclic_order(m.q), Rule::AutMooreExt, std::nullopt};
}

}  // namespace wedgeaut
