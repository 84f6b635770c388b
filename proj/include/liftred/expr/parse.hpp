#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "liftred/errors.hpp"
#include "liftred/expr/polynomial.hpp"

namespace liftred {

namespace detail {

enum class Tok { number, ident, plus, minus, star, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

/// Splits polynomial text into tokens. A number is `digits` or `digits/digits`.
inline std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_ident_start = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (is_digit(c)) {
            while (i < text.size() && is_digit(text[i])) ++i;
            if (i + 1 < text.size() && text[i] == '/' && is_digit(text[i + 1])) {
                ++i;
                while (i < text.size() && is_digit(text[i])) ++i;
            }
            out.push_back({Tok::number, std::string(text.substr(start, i - start)), start});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < text.size() && is_ident_char(text[i])) ++i;
            out.push_back({Tok::ident, std::string(text.substr(start, i - start)), start});
            continue;
        }
        Tok kind;
        switch (c) {
        case '+': kind = Tok::plus; break;
        case '-': kind = Tok::minus; break;
        case '*': kind = Tok::star; break;
        case '^': kind = Tok::caret; break;
        case '(': kind = Tok::lparen; break;
        case ')': kind = Tok::rparen; break;
        default: throw SyntaxError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({kind, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::end, "", text.size()});
    return out;
}

class TokenStream {
  public:
    explicit TokenStream(std::string_view text) : toks_(tokenize(text)) {}

    const Token &peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token &next() {
        const Token &t = toks_[pos_];
        if (pos_ + 1 < toks_.size()) ++pos_;
        return t;
    }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        next();
        return true;
    }
    const Token &expect(Tok k, const char *what) {
        if (peek().kind != k) throw SyntaxError(std::string("expected ") + what, peek().pos);
        return next();
    }

  private:
    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

/// Recursive-descent parser for
///   expr    := ['+'|'-'] term (('+'|'-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ['^' integer]
///   primary := number | identifier | '(' expr ')'
class PolyParser {
  public:
    PolyParser(TokenStream &ts, const std::vector<std::string> &vars) : ts_(ts), vars_(vars) {}

    Polynomial expr() {
        Polynomial acc(vars_);
        bool negate = false;
        if (ts_.accept(Tok::minus))
            negate = true;
        else
            ts_.accept(Tok::plus);
        acc = negate ? -term() : term();
        for (;;) {
            if (ts_.accept(Tok::plus))
                acc += term();
            else if (ts_.accept(Tok::minus))
                acc -= term();
            else
                return acc;
        }
    }

    Polynomial term() {
        Polynomial acc = factor();
        while (ts_.accept(Tok::star)) acc *= factor();
        return acc;
    }

    Polynomial factor() {
        Polynomial base = primary();
        return apply_power(std::move(base));
    }

    Polynomial apply_power(Polynomial base) {
        if (!ts_.accept(Tok::caret)) return base;
        const Token &t = ts_.peek();
        if (t.kind != Tok::number || t.text.find('/') != std::string::npos)
            throw SyntaxError("exponent must be a nonnegative integer literal", t.pos);
        ts_.next();
        unsigned long k = 0;
        try {
            k = std::stoul(t.text);
        } catch (const std::exception &) {
            throw SyntaxError("exponent out of range", t.pos);
        }
        if (k > 4096) throw SyntaxError("exponent out of range", t.pos);
        return base.pow(static_cast<unsigned>(k));
    }

    Polynomial primary() {
        const Token &t = ts_.peek();
        switch (t.kind) {
        case Tok::number: {
            ts_.next();
            return Polynomial::constant(parse_rational(t.text), vars_);
        }
        case Tok::ident: {
            ts_.next();
            if (std::find(vars_.begin(), vars_.end(), t.text) == vars_.end()) throw UnknownSymbol(t.text);
            return Polynomial::variable(t.text, vars_);
        }
        case Tok::lparen: {
            ts_.next();
            Polynomial inner = expr();
            ts_.expect(Tok::rparen, "')'");
            return inner;
        }
        default: throw SyntaxError("expected number, identifier or '('", t.pos);
        }
    }

  private:
    TokenStream &ts_;
    const std::vector<std::string> &vars_;
};

} // namespace detail

/// Parses a polynomial over `variables` (ASCII grammar, no implicit multiplication).
inline Polynomial parse_poly(std::string_view text, const std::vector<std::string> &variables) {
    detail::TokenStream ts(text);
    detail::PolyParser parser(ts, variables);
    Polynomial p = parser.expr();
    if (ts.peek().kind != detail::Tok::end) throw SyntaxError("unexpected trailing input", ts.peek().pos);
    return p;
}

} // namespace liftred
