#include "kmu/parser.hpp"

#include <cctype>
#include <cstdint>

namespace kmu {

namespace {

struct Lexer {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
};

struct Parser {
    Lexer lex;
    RingPtr ring;

    Polynomial parse_expr() {
        Polynomial acc = parse_term();
        for (;;) {
            if (lex.accept('+'))
                acc += parse_term();
            else if (lex.accept('-'))
                acc -= parse_term();
            else
                return acc;
        }
    }

    Polynomial parse_term() {
        Polynomial acc = parse_factor();
        for (;;) {
            char c = lex.peek();
            if (c == '*') {
                ++lex.pos;
                acc *= parse_factor();
            } else if (c == '/') {
                std::size_t at = lex.pos;
                ++lex.pos;
                Polynomial d = parse_factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                if (!d.is_zero() && (d.nterms() != 1 || !d.leading_term().mono.is_one()))
                    throw ParseError("division is only defined by constants", at);
                acc = acc * d.leading_term().coef.inverse();
            } else {
                return acc;
            }
        }
    }

    Polynomial parse_factor() {
        Polynomial base = parse_atom();
        if (lex.accept('^')) {
            std::size_t at = lex.pos;
            if (!std::isdigit(static_cast<unsigned char>(lex.peek())))
                throw ParseError("expected integer exponent after '^'", at);
            unsigned long long e = parse_natural();
            if (e > 0xffff) throw OverflowError("exponent out of 16-bit range");
            base = base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    Polynomial parse_atom() {
        char c = lex.peek();
        std::size_t at = lex.pos;
        if (c == '-') {
            ++lex.pos;
            return -parse_factor();
        }
        if (c == '+') {
            ++lex.pos;
            return parse_factor();
        }
        if (c == '(') {
            ++lex.pos;
            Polynomial inner = parse_expr();
            if (!lex.accept(')')) throw ParseError("expected ')'", lex.pos);
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            unsigned long long v = parse_natural();
            if (v > static_cast<unsigned long long>(INT64_MAX)) throw OverflowError("integer literal overflow");
            return Polynomial::constant(ring, static_cast<std::int64_t>(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name = parse_ident();
            int idx = ring->var_index(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", at);
            return Polynomial::variable(ring, static_cast<std::size_t>(idx));
        }
        if (c == '\0') throw ParseError("unexpected end of input", at);
        throw ParseError(std::string("unexpected character '") + c + "'", at);
    }

    unsigned long long parse_natural() {
        lex.skip_ws();
        unsigned long long v = 0;
        bool any = false;
        while (lex.pos < lex.text.size() && std::isdigit(static_cast<unsigned char>(lex.text[lex.pos]))) {
            v = v * 10 + (lex.text[lex.pos] - '0');
            if (v > (1ULL << 62)) throw OverflowError("integer literal overflow");
            ++lex.pos;
            any = true;
        }
        if (!any) throw ParseError("expected integer", lex.pos);
        return v;
    }

    std::string parse_ident() {
        lex.skip_ws();
        std::size_t start = lex.pos;
        while (lex.pos < lex.text.size() &&
               (std::isalnum(static_cast<unsigned char>(lex.text[lex.pos])) || lex.text[lex.pos] == '_'))
            ++lex.pos;
        return std::string(lex.text.substr(start, lex.pos - start));
    }
};

}  // namespace

std::string Polynomial::str() const { return format_polynomial(*this); }

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
    Parser p{Lexer{text}, ring};
    Polynomial result = p.parse_expr();
    if (!p.lex.eof()) throw ParseError("trailing input", p.lex.pos);
    return result;
}

std::string format_polynomial(const Polynomial& f) {
    if (f.is_zero()) return "0";
    const GradedRing& ring = *f.ring();
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        Scalar c = t.coef;
        bool negative = c.num() < 0;  // only over Q; F_p residues print as stored
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (negative) c = -c;
        std::string mono;
        for (std::size_t i = 0; i < ring.nvars(); ++i) {
            if (!t.mono[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += ring.vars()[i];
            if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
        }
        if (mono.empty())
            out += c.str();
        else if (c.is_one())
            out += mono;
        else
            out += c.str() + "*" + mono;
        first = false;
    }
    return out;
}

}  // namespace kmu
