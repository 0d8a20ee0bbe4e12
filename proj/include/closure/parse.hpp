#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "closure/polynomial.hpp"

namespace closure {

namespace lex {

enum class Tok { Ident, Number, Plus, Minus, Star, Caret, LParen, RParen, LBracket,
                 RBracket, Comma, Semicolon, Equals, End };

struct Token {
    Tok kind;
    std::string text;
    int line = 1;
    int col = 1;
};

class Lexer {
  public:
    explicit Lexer(const std::string& src) : src_(src) { advance(); }

    const Token& peek() const { return cur_; }

    Token next() {
        Token t = cur_;
        advance();
        return t;
    }

    bool at_end() const { return cur_.kind == Tok::End; }

  private:
    void advance() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) bump();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= src_.size()) {
            cur_ = {Tok::End, "", line_, col_};
            return;
        }
        char c = src_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string s;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
                s += src_[pos_];
                bump();
            }
            cur_ = {Tok::Ident, std::move(s), cur_.line, cur_.col};
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string s;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                s += src_[pos_];
                bump();
            }
            // rational literal a/b
            if (pos_ + 1 < src_.size() && src_[pos_] == '/' &&
                std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
                s += '/';
                bump();
                while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
                    s += src_[pos_];
                    bump();
                }
            }
            cur_ = {Tok::Number, std::move(s), cur_.line, cur_.col};
            return;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            case '[': k = Tok::LBracket; break;
            case ']': k = Tok::RBracket; break;
            case ',': k = Tok::Comma; break;
            case ';': k = Tok::Semicolon; break;
            case '=': k = Tok::Equals; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", line_, col_);
        }
        bump();
        cur_ = {k, std::string(1, c), cur_.line, cur_.col};
    }

    void bump() {
        if (src_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& src_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_;
};

}  // namespace lex

namespace detail {

class PolyParser {
  public:
    PolyParser(const PolyRing& ring, lex::Lexer& lx) : ring_(ring), lx_(lx) {}

    // expr := ['-'] term { ('+'|'-') term }
    Polynomial expr() {
        bool neg = false;
        if (lx_.peek().kind == lex::Tok::Minus) {
            lx_.next();
            neg = true;
        }
        Polynomial p = term();
        if (neg) p = -p;
        while (lx_.peek().kind == lex::Tok::Plus || lx_.peek().kind == lex::Tok::Minus) {
            bool sub = lx_.next().kind == lex::Tok::Minus;
            Polynomial q = term();
            p = sub ? p - q : p + q;
        }
        return p;
    }

  private:
    Polynomial term() {
        Polynomial p = factor();
        while (lx_.peek().kind == lex::Tok::Star) {
            lx_.next();
            p = p * factor();
        }
        return p;
    }

    Polynomial factor() {
        Polynomial base = atom();
        if (lx_.peek().kind == lex::Tok::Caret) {
            lex::Token caret = lx_.next();
            lex::Token e = lx_.next();
            if (e.kind != lex::Tok::Number || e.text.find('/') != std::string::npos)
                throw ParseError("exponent must be a non-negative integer", caret.line, caret.col);
            long v = 0;
            for (char c : e.text) {
                v = v * 10 + (c - '0');
                if (v > kMaxExponent)
                    throw MonomialOverflowError("exponent too large: " + e.text);
            }
            base = base.pow(static_cast<unsigned long>(v));
        }
        return base;
    }

    Polynomial atom() {
        lex::Token t = lx_.next();
        switch (t.kind) {
            case lex::Tok::Number:
                return Polynomial::constant(ring_, rational_from_string(t.text));
            case lex::Tok::Ident: {
                int i = ring_.var_index(t.text);
                if (i < 0)
                    throw ParseError("unknown variable " + t.text, t.line, t.col);
                return Polynomial::variable(ring_, static_cast<std::size_t>(i));
            }
            case lex::Tok::LParen: {
                Polynomial p = expr();
                lex::Token close = lx_.next();
                if (close.kind != lex::Tok::RParen)
                    throw ParseError("expected ')'", close.line, close.col);
                return p;
            }
            case lex::Tok::Minus:
                return -factor();
            default:
                throw ParseError("expected polynomial", t.line, t.col);
        }
    }

    const PolyRing& ring_;
    lex::Lexer& lx_;
};

}  // namespace detail

inline Polynomial parse_polynomial(const PolyRing& ring, const std::string& text) {
    lex::Lexer lx(text);
    detail::PolyParser p(ring, lx);
    Polynomial out = p.expr();
    if (!lx.at_end())
        throw ParseError("trailing input after polynomial", lx.peek().line, lx.peek().col);
    return out;
}

inline std::vector<Polynomial> parse_polynomials(const PolyRing& ring,
                                                 const std::vector<std::string>& texts) {
    std::vector<Polynomial> out;
    out.reserve(texts.size());
    for (const auto& t : texts) out.push_back(parse_polynomial(ring, t));
    return out;
}

}  // namespace closure
