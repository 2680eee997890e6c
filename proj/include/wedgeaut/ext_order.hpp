#pragma once

#include <span>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace wedgeaut {

using BigInt = boost::multiprecision::cpp_int;

/// Order of a group or cardinality of a mapping set, extended with
/// "infinite" and "unknown". A finite order is always >= 1 because every
/// mapping set contains the constant class.
class ExtOrder {
public:
    enum class Kind { Finite, Infinite, Unknown };

    /// Finite(1).
    ExtOrder() = default;

    /// Throws std::invalid_argument when n < 1.
    static ExtOrder finite(BigInt n);
    static ExtOrder infinite() { return ExtOrder(Kind::Infinite); }
    static ExtOrder unknown() { return ExtOrder(Kind::Unknown); }
    static ExtOrder one() { return ExtOrder(); }

    Kind kind() const noexcept { return kind_; }
    bool is_finite() const noexcept { return kind_ == Kind::Finite; }
    bool is_infinite() const noexcept { return kind_ == Kind::Infinite; }
    bool is_unknown() const noexcept { return kind_ == Kind::Unknown; }
    bool is_one() const noexcept { return is_finite() && value_ == 1; }

    /// The finite value. Throws std::logic_error for Infinite/Unknown.
    const BigInt& value() const;

    /// "32", "infinite" or "unknown".
    std::string to_string() const;

    friend bool operator==(const ExtOrder& a, const ExtOrder& b) {
        return a.kind_ == b.kind_ && a.value_ == b.value_;
    }

private:
    explicit ExtOrder(Kind kind) : kind_(kind), value_(0) {}

    Kind kind_ = Kind::Finite;
    BigInt value_ = 1;  // 0 unless kind_ == Finite
};

/// Infinite absorbs everything (including Unknown); otherwise Unknown
/// absorbs Finite; Finite values multiply.
ExtOrder mul(const ExtOrder& a, const ExtOrder& b);

inline ExtOrder operator*(const ExtOrder& a, const ExtOrder& b) { return mul(a, b); }

/// Left fold of mul starting at Finite(1).
ExtOrder product(std::span<const ExtOrder> xs);

}  // namespace wedgeaut
