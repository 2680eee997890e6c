#pragma once

#include <string>

#include <json.hpp>

#include "wedgeaut/engine.hpp"

namespace wedgeaut {

/// {"finite": N} | "infinite" | "unknown". N is a JSON number when it fits
/// in 64 bits and a decimal string otherwise.
nlohmann::ordered_json order_to_json(const ExtOrder& order);

/// Report in the fixed-key-order schema
///   input, reducibility{mode, pairs}, total, factors[], omitted_trivial, notes.
/// Without `explain`, factors of order 1 are left out of "factors" and
/// counted in "omitted_trivial"; with it, every evaluated factor is listed
/// and only pruned factors are counted.
nlohmann::ordered_json to_json(const FactorReport& report, bool explain);

/// Human-readable report with the same factor selection as to_json.
std::string render_text(const FactorReport& report, bool explain);

}  // namespace wedgeaut
