#include "wedgeaut/ext_order.hpp"

#include <stdexcept>

namespace wedgeaut {

ExtOrder ExtOrder::finite(BigInt n) {
    if (n < 1) {
        throw std::invalid_argument("finite order must be at least 1, got " + n.str());
    }
    ExtOrder o;
    o.value_ = std::move(n);
    return o;
}

const BigInt& ExtOrder::value() const {
    if (kind_ != Kind::Finite) {
        throw std::logic_error("ExtOrder::value() on a non-finite order");
    }
    return value_;
}

std::string ExtOrder::to_string() const {
    switch (kind_) {
    case Kind::Finite:
        return value_.str();
    case Kind::Infinite:
        return "infinite";
    case Kind::Unknown:
        return "unknown";
    }
    return "unknown";
}

ExtOrder mul(const ExtOrder& a, const ExtOrder& b) {
    if (a.is_infinite() || b.is_infinite()) {
        return ExtOrder::infinite();
    }
    if (a.is_unknown() || b.is_unknown()) {
        return ExtOrder::unknown();
    }
    return ExtOrder::finite(a.value() * b.value());
}

ExtOrder product(std::span<const ExtOrder> xs) {
    ExtOrder acc = ExtOrder::one();
    for (const auto& x : xs) {
        acc = mul(acc, x);
    }
    return acc;
}

}  // namespace wedgeaut
