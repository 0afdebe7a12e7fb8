#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "grasp/errors.hpp"

namespace grasp {

enum class TokenKind : std::uint8_t {
    Identifier, // lowercase-led constant symbol
    Number,     // nonnegative integer constant
    Variable,   // uppercase- or underscore-led token (rejected later)
    Not,
    ColonDash,
    Comma,
    Dot,
    DotDot,
    LParen,
    RParen,
    End,
};

struct Token {
    TokenKind kind;
    std::string text;
    SourcePos pos;
};

inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    int line = 1, col = 1;
    std::size_t i = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n; ++k) {
            if (text[i + k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        i += n;
    };
    while (i < text.size()) {
        char c = text[i];
        SourcePos pos{line, col};
        if (c == '%') {
            while (i < text.size() && text[i] != '\n') advance(1);
            continue;
        }
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
            out.push_back({TokenKind::Number, std::string(text.substr(i, j - i)), pos});
            advance(j - i);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
                ++j;
            std::string word(text.substr(i, j - i));
            TokenKind kind;
            if (word == "not")
                kind = TokenKind::Not;
            else if (std::islower(static_cast<unsigned char>(c)))
                kind = TokenKind::Identifier;
            else
                kind = TokenKind::Variable;
            out.push_back({kind, std::move(word), pos});
            advance(j - i);
            continue;
        }
        switch (c) {
        case ':':
            if (i + 1 < text.size() && text[i + 1] == '-') {
                out.push_back({TokenKind::ColonDash, ":-", pos});
                advance(2);
                continue;
            }
            throw LexError(pos, "unexpected character ':'");
        case ',':
            out.push_back({TokenKind::Comma, ",", pos});
            advance(1);
            continue;
        case '.':
            if (i + 1 < text.size() && text[i + 1] == '.') {
                out.push_back({TokenKind::DotDot, "..", pos});
                advance(2);
                continue;
            }
            out.push_back({TokenKind::Dot, ".", pos});
            advance(1);
            continue;
        case '(':
            out.push_back({TokenKind::LParen, "(", pos});
            advance(1);
            continue;
        case ')':
            out.push_back({TokenKind::RParen, ")", pos});
            advance(1);
            continue;
        default:
            throw LexError(pos, std::string("unexpected character '") + c + "'");
        }
    }
    out.push_back({TokenKind::End, "", {line, col}});
    return out;
}

} // namespace grasp
