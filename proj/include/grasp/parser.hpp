#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "grasp/ast.hpp"
#include "grasp/errors.hpp"
#include "grasp/lexer.hpp"

namespace grasp {

namespace detail {

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Program parse() {
        Program program;
        std::unordered_set<std::string> seen;
        while (peek().kind != TokenKind::End) {
            Rule rule = parse_rule();
            if (rule.head) note_atom(program, seen, *rule.head);
            for (const BodyLiteral& lit : rule.body) note_atom(program, seen, lit.atom);
            program.rules.push_back(std::move(rule));
        }
        return program;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& get() { return tokens_[pos_++]; }

    [[noreturn]] void fail(const Token& t, const std::string& msg) {
        throw ParseError(t.pos, msg + (t.kind == TokenKind::End
                                           ? " at end of input"
                                           : " at '" + t.text + "'"));
    }

    void expect(TokenKind kind, const char* what) {
        if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
        get();
    }

    static void note_atom(Program& p, std::unordered_set<std::string>& seen, const Atom& a) {
        if (seen.insert(a.text).second) p.atoms.push_back(a);
    }

    Rule parse_rule() {
        Rule rule;
        const Token& t = peek();
        if (t.kind == TokenKind::ColonDash) {
            get();
            rule.body = parse_body();
        } else if (t.kind == TokenKind::Identifier) {
            rule.head = parse_atom();
            if (peek().kind == TokenKind::ColonDash) {
                get();
                rule.body = parse_body();
            }
        } else if (t.kind == TokenKind::Variable) {
            throw VariableError(t.pos, "variable '" + t.text +
                                           "' is not allowed: input must be ground");
        } else {
            fail(t, "expected a rule");
        }
        expect(TokenKind::Dot, "'.' terminating the rule");
        return rule;
    }

    std::vector<BodyLiteral> parse_body() {
        std::vector<BodyLiteral> body;
        while (true) {
            BodyLiteral lit;
            if (peek().kind == TokenKind::Not) {
                get();
                if (peek().kind == TokenKind::Not)
                    fail(peek(), "'not' cannot be nested");
                lit.sign = Sign::Negative;
            }
            lit.atom = parse_atom();
            body.push_back(std::move(lit));
            if (peek().kind != TokenKind::Comma) break;
            get();
        }
        return body;
    }

    Atom parse_atom() {
        const Token& t = peek();
        if (t.kind == TokenKind::Variable)
            throw VariableError(t.pos, "variable '" + t.text +
                                           "' is not allowed: input must be ground");
        if (t.kind != TokenKind::Identifier) fail(t, "expected an atom");
        return Atom{parse_term()};
    }

    // term := identifier [ '(' term {',' term} ')' ] | number
    std::string parse_term() {
        const Token& t = get();
        if (t.kind == TokenKind::Number) return t.text;
        if (t.kind == TokenKind::Variable)
            throw VariableError(t.pos, "variable '" + t.text +
                                           "' is not allowed: input must be ground");
        if (t.kind == TokenKind::DotDot)
            throw RangeSyntaxError(t.pos,
                                   "interval syntax '..' is not supported; "
                                   "declare each ground instance separately");
        if (t.kind != TokenKind::Identifier) fail(t, "expected a term");
        std::string text = t.text;
        if (peek().kind == TokenKind::LParen) {
            get();
            text += '(';
            while (true) {
                if (peek().kind == TokenKind::DotDot)
                    throw RangeSyntaxError(peek().pos,
                                           "interval syntax '..' is not supported; "
                                           "declare each ground instance separately");
                text += parse_term();
                if (peek().kind == TokenKind::DotDot)
                    throw RangeSyntaxError(peek().pos,
                                           "interval syntax '..' is not supported; "
                                           "declare each ground instance separately");
                if (peek().kind != TokenKind::Comma) break;
                get();
                text += ',';
            }
            expect(TokenKind::RParen, "')'");
            text += ')';
        }
        return text;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Program parse_program(std::string_view text) {
    return detail::Parser(tokenize(text)).parse();
}

} // namespace grasp
