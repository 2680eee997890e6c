#include "wedgeaut/abelian_group.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wedgeaut/errors.hpp"

namespace wedgeaut {

namespace {

std::uint64_t checked_lcm(std::uint64_t a, std::uint64_t b) {
    const std::uint64_t g = std::gcd(a, b);
    const std::uint64_t q = a / g;
    if (q != 0 && b > std::numeric_limits<std::uint64_t>::max() / q) {
        throw std::overflow_error("invariant factor exceeds 64 bits");
    }
    return q * b;
}

class GroupParser {
public:
    explicit GroupParser(std::string_view text) : text_(text) {}

    AbelianGroup parse() {
        skip_ws();
        if (at_end()) {
            fail("empty group expression");
        }
        unsigned rank = 0;
        std::vector<std::uint64_t> orders;
        bool saw_zero = false;
        std::size_t terms = 0;
        while (true) {
            skip_ws();
            ++terms;
            if (peek() == '0') {
                ++pos_;
                saw_zero = true;
            } else if (peek() == 'Z') {
                ++pos_;
                skip_ws();
                if (peek() == '^') {
                    ++pos_;
                    skip_ws();
                    const std::size_t at = pos_;
                    const std::uint64_t r = number();
                    if (r < 1 || r > std::numeric_limits<unsigned>::max()) {
                        fail("rank exponent must be at least 1", at);
                    }
                    rank += static_cast<unsigned>(r);
                } else if (peek() == '/') {
                    ++pos_;
                    skip_ws();
                    const std::size_t at = pos_;
                    const std::uint64_t n = number();
                    if (n < 2) {
                        fail("cyclic order must be at least 2", at);
                    }
                    orders.push_back(n);
                } else {
                    rank += 1;
                }
            } else {
                fail("expected '0' or 'Z'");
            }
            skip_ws();
            if (at_end()) {
                break;
            }
            if (peek() != '+') {
                fail("expected '+'");
            }
            ++pos_;
        }
        if (saw_zero && terms > 1) {
            fail("'0' cannot be combined with other summands", 0);
        }
        return AbelianGroup(rank, std::move(orders));
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::uint64_t number() {
        std::uint64_t value = 0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec == std::errc::result_out_of_range) {
            fail("number out of range");
        }
        if (ec != std::errc() || ptr == first) {
            fail("expected a number");
        }
        pos_ += static_cast<std::size_t>(ptr - first);
        return value;
    }

    [[noreturn]] void fail(const std::string& what) { fail(what, pos_); }
    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        throw ParseError("invalid group \"" + std::string(text_) + "\": " + what, at);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

AbelianGroup::AbelianGroup(unsigned rank, std::vector<std::uint64_t> cyclic_orders)
    : rank_(rank) {
    for (auto d : cyclic_orders) {
        if (d == 0) {
            throw std::invalid_argument("cyclic order 0 is not a torsion summand");
        }
    }
    // Pairwise gcd/lcm folding acts as a sorting network on every p-adic
    // valuation, which leaves the list in divisibility-chain form.
    auto& t = cyclic_orders;
    for (std::size_t i = 0; i < t.size(); ++i) {
        for (std::size_t j = i + 1; j < t.size(); ++j) {
            const std::uint64_t g = std::gcd(t[i], t[j]);
            const std::uint64_t l = checked_lcm(t[i], t[j]);
            t[i] = g;
            t[j] = l;
        }
    }
    for (auto d : t) {
        if (d != 1) {
            torsion_.push_back(d);
        }
    }
}

AbelianGroup AbelianGroup::parse(std::string_view text) { return GroupParser(text).parse(); }

std::string AbelianGroup::to_string() const {
    if (is_trivial()) {
        return "0";
    }
    std::string out;
    auto append = [&out](const std::string& term) {
        if (!out.empty()) {
            out += " + ";
        }
        out += term;
    };
    if (rank_ == 1) {
        append("Z");
    } else if (rank_ > 1) {
        append("Z^" + std::to_string(rank_));
    }
    for (auto d : torsion_) {
        append("Z/" + std::to_string(d));
    }
    return out;
}

AbelianGroup operator+(const AbelianGroup& a, const AbelianGroup& b) {
    std::vector<std::uint64_t> orders = a.torsion_;
    orders.insert(orders.end(), b.torsion_.begin(), b.torsion_.end());
    return AbelianGroup(a.rank_ + b.rank_, std::move(orders));
}

ExtOrder group_order(const AbelianGroup& g) {
    if (g.rank() > 0) {
        return ExtOrder::infinite();
    }
    BigInt n = 1;
    for (auto d : g.torsion()) {
        n *= d;
    }
    return ExtOrder::finite(std::move(n));
}

AbelianGroup hom_group(const AbelianGroup& a, const AbelianGroup& b) {
    // Hom(Z^r + T, Z^s + U) = Z^(rs) + U^r + Hom(T, U).
    std::vector<std::uint64_t> orders;
    for (unsigned i = 0; i < a.rank(); ++i) {
        orders.insert(orders.end(), b.torsion().begin(), b.torsion().end());
    }
    for (auto d : a.torsion()) {
        for (auto e : b.torsion()) {
            orders.push_back(std::gcd(d, e));
        }
    }
    return AbelianGroup(a.rank() * b.rank(), std::move(orders));
}

AbelianGroup ext_group(const AbelianGroup& a, const AbelianGroup& b) {
    // Ext(Z^r + T, Z^s + U) = T^s + Ext(T, U).
    std::vector<std::uint64_t> orders;
    for (auto d : a.torsion()) {
        for (unsigned i = 0; i < b.rank(); ++i) {
            orders.push_back(d);
        }
        for (auto e : b.torsion()) {
            orders.push_back(std::gcd(d, e));
        }
    }
    return AbelianGroup(0, std::move(orders));
}

std::uint64_t euler_totient(std::uint64_t n) {
    std::uint64_t result = n;
    for (std::uint64_t p = 2; p <= n / p; ++p) {
        if (n % p == 0) {
            while (n % p == 0) {
                n /= p;
            }
            result -= result / p;
        }
    }
    if (n > 1) {
        result -= result / n;
    }
    return result;
}

ExtOrder aut_cyclic_order(std::uint64_t q) {
    if (q < 2) {
        throw std::invalid_argument("aut_cyclic_order requires q >= 2");
    }
    return ExtOrder::finite(euler_totient(q));
}

}  // namespace wedgeaut
