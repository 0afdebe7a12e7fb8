#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace grasp {

// A ground propositional atom, stored in its canonical printed form,
// e.g. "p" or "color(1,red)". Equality is string equality.
struct Atom {
    std::string text;

    const std::string& str() const { return text; }
    friend auto operator<=>(const Atom&, const Atom&) = default;
};

enum class Sign : std::uint8_t { Positive, Negative };

inline Sign flip(Sign s) {
    return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}

inline char sign_char(Sign s) { return s == Sign::Positive ? '+' : '-'; }

struct BodyLiteral {
    Atom atom;
    Sign sign = Sign::Positive;

    bool negated() const { return sign == Sign::Negative; }
    friend auto operator<=>(const BodyLiteral&, const BodyLiteral&) = default;
};

// One rule of the program. A missing head makes the rule a constraint;
// an empty body makes it a fact.
struct Rule {
    std::optional<Atom> head;
    std::vector<BodyLiteral> body;

    bool is_fact() const { return head.has_value() && body.empty(); }
    bool is_constraint() const { return !head.has_value(); }

    std::string to_string() const {
        std::string out;
        if (head) out += head->text;
        if (!body.empty()) {
            if (head) out += ' ';
            out += ":- ";
            for (std::size_t i = 0; i < body.size(); ++i) {
                if (i > 0) out += ", ";
                if (body[i].negated()) out += "not ";
                out += body[i].atom.text;
            }
        }
        out += '.';
        return out;
    }

    friend auto operator<=>(const Rule&, const Rule&) = default;
};

// A parsed program: rules in source order plus the Herbrand base in
// first-occurrence order.
struct Program {
    std::vector<Rule> rules;
    std::vector<Atom> atoms;

    std::string to_string() const {
        std::string out;
        for (const Rule& r : rules) {
            out += r.to_string();
            out += '\n';
        }
        return out;
    }

    friend bool operator==(const Program&, const Program&) = default;
};

} // namespace grasp
