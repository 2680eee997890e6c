#include "wedgeaut/space.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "wedgeaut/errors.hpp"

namespace wedgeaut {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class SpaceParser {
public:
    SpaceParser(std::string_view text, std::size_t offset) : text_(text), offset_(offset) {}

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    std::size_t position() const { return pos_; }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    void expect(char c) {
        if (peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    SpaceDesc space(bool allow_generic) {
        skip_ws();
        if (allow_generic && text_.substr(pos_).starts_with("Sigma")) {
            pos_ += 5;
            return generic();
        }
        if (accept('S')) {
            const std::size_t at = pos_;
            const int n = small_int();
            if (n < 1) {
                fail("sphere dimension must be at least 1", at);
            }
            return SpaceDesc::sphere(n);
        }
        if (accept('M')) {
            auto [q, n] = moore_args();
            return SpaceDesc::moore(q, n);
        }
        fail(allow_generic ? "expected 'S', 'M' or 'Sigma'" : "expected 'S<n>' or 'M(<q>,<n>)'");
    }

    [[noreturn]] void fail(const std::string& what) {
        skip_ws();
        fail(what, pos_);
    }

    [[noreturn]] void fail(const std::string& what, std::size_t at) {
        throw ParseError(what, offset_ + at);
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    std::uint64_t number() {
        skip_ws();
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

    int small_int() {
        skip_ws();
        const std::size_t at = pos_;
        const std::uint64_t v = number();
        if (v > 1'000'000) {
            fail("dimension too large", at);
        }
        return static_cast<int>(v);
    }

    std::pair<std::uint64_t, int> moore_args() {
        expect('(');
        skip_ws();
        const std::size_t q_at = pos_;
        const std::uint64_t q = number();
        if (q < 2) {
            fail("Moore space modulus must be at least 2", q_at);
        }
        expect(',');
        skip_ws();
        const std::size_t n_at = pos_;
        const int n = small_int();
        if (n < 1) {
            fail("Moore space degree must be at least 1", n_at);
        }
        expect(')');
        return {q, n};
    }

    SpaceDesc generic() {
        expect('^');
        const int s = small_int();
        expect('(');
        std::vector<std::uint64_t> moduli;
        do {
            expect('M');
            skip_ws();
            const std::size_t at = pos_;
            auto [q, n] = moore_args();
            if (n != 1) {
                fail("smash factors must be written as M(q,1)", at);
            }
            moduli.push_back(q);
        } while (accept('^'));
        expect(')');
        if (moduli.size() < 2) {
            fail("a generic smash needs at least two factors");
        }
        if (!std::is_sorted(moduli.begin(), moduli.end())) {
            fail("smash factors must be listed in ascending order");
        }
        return SpaceDesc::generic(s, std::move(moduli));
    }

    std::string_view text_;
    std::size_t offset_;
    std::size_t pos_ = 0;
};

SuspendedSummand summand_from(SpaceParser& p) { return SuspendedSummand(p.space(false)); }

}  // namespace

SpaceDesc SpaceDesc::sphere(int n) {
    if (n < 1) {
        throw std::invalid_argument("sphere dimension must be at least 1");
    }
    return SpaceDesc(Sphere{n});
}

SpaceDesc SpaceDesc::moore(std::uint64_t q, int n) {
    if (q < 2 || n < 1) {
        throw std::invalid_argument("Moore space needs q >= 2 and n >= 1");
    }
    return SpaceDesc(Moore{q, n});
}

SpaceDesc SpaceDesc::generic(int suspensions, std::vector<std::uint64_t> moduli) {
    if (suspensions < 0 || moduli.size() < 2) {
        throw std::invalid_argument("generic smash needs s >= 0 and at least two factors");
    }
    for (auto q : moduli) {
        if (q < 2) {
            throw std::invalid_argument("generic smash factor modulus must be at least 2");
        }
    }
    std::sort(moduli.begin(), moduli.end());
    return SpaceDesc(GenericSmash{suspensions, std::move(moduli)});
}

int SpaceDesc::conn() const {
    return std::visit(overloaded{
                          [](const Sphere& s) { return s.n - 1; },
                          [](const Moore& m) { return m.n - 1; },
                          [](const GenericSmash& g) {
                              return g.suspensions + static_cast<int>(g.moduli.size()) - 1;
                          },
                      },
                      v_);
}

int SpaceDesc::dim() const {
    return std::visit(overloaded{
                          [](const Sphere& s) { return s.n; },
                          [](const Moore& m) { return m.n + 1; },
                          [](const GenericSmash& g) {
                              return g.suspensions + 2 * static_cast<int>(g.moduli.size());
                          },
                      },
                      v_);
}

std::string SpaceDesc::to_string() const {
    return std::visit(overloaded{
                          [](const Sphere& s) { return "S" + std::to_string(s.n); },
                          [](const Moore& m) {
                              return "M(" + std::to_string(m.q) + "," + std::to_string(m.n) + ")";
                          },
                          [](const GenericSmash& g) {
                              std::string out = "Sigma^" + std::to_string(g.suspensions) + "(";
                              for (std::size_t i = 0; i < g.moduli.size(); ++i) {
                                  if (i > 0) {
                                      out += "^";
                                  }
                                  out += "M(" + std::to_string(g.moduli[i]) + ",1)";
                              }
                              return out + ")";
                          },
                      },
                      v_);
}

SpaceDesc parse_space(std::string_view text) {
    SpaceParser p(text, 0);
    SpaceDesc space = p.space(true);
    if (!p.at_end()) {
        p.fail("unexpected trailing input");
    }
    return space;
}

SpaceDesc suspend(const SpaceDesc& s) {
    return std::visit(overloaded{
                          [](const Sphere& x) { return SpaceDesc::sphere(x.n + 1); },
                          [](const Moore& m) { return SpaceDesc::moore(m.q, m.n + 1); },
                          [](const GenericSmash& g) {
                              return SpaceDesc::generic(g.suspensions + 1, g.moduli);
                          },
                      },
                      s.kind());
}

std::map<int, AbelianGroup> homology(const SpaceDesc& s) {
    if (const auto* x = std::get_if<Sphere>(&s.kind())) {
        return {{x->n, AbelianGroup::integers()}};
    }
    if (const auto* m = std::get_if<Moore>(&s.kind())) {
        return {{m->n, AbelianGroup::cyclic(m->q)}};
    }
    throw UnsupportedSpaceError("homology is not tracked for " + s.to_string());
}

SuspendedSummand::SuspendedSummand(SpaceDesc space)
    : space_(space), desusp_(space) {
    if (const auto* x = std::get_if<Sphere>(&space_.kind())) {
        if (x->n < 2) {
            throw NotSimplyConnectedError(space_.to_string());
        }
        desusp_ = SpaceDesc::sphere(x->n - 1);
    } else if (const auto* m = std::get_if<Moore>(&space_.kind())) {
        if (m->n < 2) {
            throw NotSimplyConnectedError(space_.to_string());
        }
        desusp_ = SpaceDesc::moore(m->q, m->n - 1);
    } else {
        throw UnsupportedSpaceError("wedge summands must be spheres or Moore spaces, got " +
                                    space_.to_string());
    }
}

SuspendedSummand parse_summand(std::string_view text, std::size_t offset) {
    SpaceParser p(text, offset);
    auto summand = summand_from(p);
    if (!p.at_end()) {
        p.fail("unexpected trailing input");
    }
    return summand;
}

std::string WedgeInput::to_string() const {
    std::string out;
    for (const auto& s : summands) {
        if (!out.empty()) {
            out += " v ";
        }
        out += s.to_string();
    }
    return out;
}

WedgeInput parse_wedge(std::string_view expr) {
    SpaceParser p(expr, 0);
    if (p.at_end()) {
        throw ParseError("empty wedge expression", p.position());
    }
    WedgeInput w;
    w.summands.push_back(summand_from(p));
    while (!p.at_end()) {
        if (!p.accept('v')) {
            p.fail("expected 'v' between summands");
        }
        w.summands.push_back(summand_from(p));
    }
    return w;
}

}  // namespace wedgeaut
