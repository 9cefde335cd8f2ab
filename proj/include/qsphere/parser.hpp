#pragma once

/**
 * @file parser.hpp
 * @brief Text grammar for scalars and noncommutative polynomials.
 *
 *   poly   := ['+'|'-'] term (('+'|'-') term)*
 *   term   := factor (('*' | '/') ['-'] factor | factor)*     juxtaposition multiplies
 *   factor := atom '''* ('^' ['-'] nat)?
 *   atom   := nat | 'q' | 'i' | 'u' | 'z'nat | 'e(' int ',' nat ',' nat ')' | '(' poly ')'
 *
 * `'` is the star (so `*` can mean multiplication). Division and negative
 * powers are only allowed on scalar subexpressions, i.e. rational functions
 * in q. `i` is accepted only in Gaussian mode, `e(j,k,l)` only when basis
 * terms are enabled (arity 1) and `u` only in circle mode, where u^-k means
 * (z0')^k.
 */

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <type_traits>

#include "errors.hpp"
#include "ncpoly.hpp"

namespace qsphere {

struct ExprContext {
    int arity = 1;
    bool gaussian_mode = false;
    bool basis_terms = false;  ///< accept e(j,k,l) atoms (arity must be >= 1)
    bool circle_unit = false;  ///< accept u = z0 with u^-k = z0'^k (arity 0)
};

namespace detail {

template <class C>
class PolyParser {
public:
    using F = typename C::scalar_type;

    PolyParser(std::string_view text, const ExprContext& ctx) : src_(text), ctx_(ctx) {}

    NCPoly<C> parse() {
        skip_ws();
        if (at_end()) throw SyntaxError("empty expression", pos_);
        NCPoly<C> v = parse_sum();
        skip_ws();
        if (!at_end()) throw SyntaxError(std::string("unexpected '") + src_[pos_] + "'", pos_);
        return v;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return at_end() ? '\0' : src_[pos_]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) throw SyntaxError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }

    NCPoly<C> scalar(const C& c) const { return NCPoly<C>(ctx_.arity, c); }

    NCPoly<C> parse_sum() {
        skip_ws();
        bool negate = false;
        if (peek() == '+' || peek() == '-') {
            negate = peek() == '-';
            ++pos_;
        }
        NCPoly<C> acc = parse_product();
        if (negate) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            NCPoly<C> t = parse_product();
            if (c == '+') acc += t;
            else acc -= t;
        }
        return acc;
    }

    bool starts_atom(char c) const {
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
    }

    NCPoly<C> parse_signed_factor() {
        skip_ws();
        if (peek() == '-') {
            ++pos_;
            return -parse_signed_factor();
        }
        if (peek() == '+') ++pos_;
        return parse_factor();
    }

    NCPoly<C> parse_product() {
        NCPoly<C> acc = parse_factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = acc * parse_signed_factor();
            } else if (c == '/') {
                std::size_t at = ++pos_;
                NCPoly<C> d = parse_signed_factor();
                if (!d.is_scalar()) throw SyntaxError("division by a noncommutative expression", at);
                if (d.is_zero()) throw SyntaxError("division by zero", at);
                acc = acc.scaled(C(1) / d.scalar_value());
            } else if (starts_atom(c)) {
                acc = acc * parse_factor();
            } else {
                break;
            }
        }
        return acc;
    }

    NCPoly<C> parse_factor() {
        NCPoly<C> base = parse_atom();
        for (;;) {
            skip_ws();
            if (peek() == '\'') {
                ++pos_;
                base = involution(base);
            } else {
                break;
            }
        }
        skip_ws();
        if (peek() == '^') {
            std::size_t at = pos_++;
            skip_ws();
            bool negative = false;
            if (peek() == '-') {
                negative = true;
                ++pos_;
            }
            long e = parse_nat();
            if (base.is_scalar()) {
                C s = base.scalar_value();
                if (negative && s.is_zero()) throw SyntaxError("zero to a negative power", at);
                return scalar(s.pow(negative ? -e : e));
            }
            if (negative) {
                bool unit = ctx_.circle_unit && base.size() == 1 && base.terms().begin()->first.size() == 1 &&
                            base.terms().begin()->second.is_one();
                if (!unit) throw NegativeWordPower(at);
                return power(involution(base), static_cast<unsigned>(e));
            }
            return power(base, static_cast<unsigned>(e));
        }
        return base;
    }

    long parse_nat() {
        skip_ws();
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) throw SyntaxError("expected a natural number", start);
        std::string digits(src_.substr(start, pos_ - start));
        if (digits.size() > 9) throw SyntaxError("number too large", start);
        return std::stol(digits);
    }

    long parse_int() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        long v = parse_nat();
        return neg ? -v : v;
    }

    NCPoly<C> parse_atom() {
        skip_ws();
        std::size_t start = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            NCPoly<C> v = parse_sum();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            mpz_class value(std::string(src_.substr(start, pos_ - start)), 10);
            return scalar(C(F(Rational(value))));
        }
        if (!std::isalpha(static_cast<unsigned char>(c))) {
            if (at_end()) throw SyntaxError("unexpected end of input", pos_);
            throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
        }
        if (c == 'z') {
            ++pos_;
            std::size_t digits = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            std::string ident(src_.substr(start, pos_ - start));
            if (digits == pos_ || pos_ - digits > 6) throw UnknownGenerator(ident, start);
            int index = std::stoi(ident.substr(1));
            if (index > ctx_.arity) throw UnknownGenerator(ident, start);
            return NCPoly<C>::gen(ctx_.arity, index);
        }
        if (c == 'q') {
            ++pos_;
            return scalar(C::q());
        }
        if (c == 'i') {
            ++pos_;
            if constexpr (std::is_same_v<F, Gaussian>) {
                if (ctx_.gaussian_mode) return scalar(C(Gaussian::i()));
            }
            throw SyntaxError("imaginary unit 'i' requires Gaussian mode", start);
        }
        if (c == 'u' && ctx_.circle_unit) {
            ++pos_;
            return NCPoly<C>::gen(ctx_.arity, 0);
        }
        if (c == 'e' && ctx_.basis_terms) {
            ++pos_;
            expect('(');
            long j = parse_int();
            expect(',');
            long k = parse_nat();
            expect(',');
            long l = parse_nat();
            expect(')');
            if (ctx_.arity < 1) throw UnknownGenerator("e", start);
            return NCPoly<C>(ctx_.arity, basis_word(j, static_cast<unsigned long>(k), static_cast<unsigned long>(l)));
        }
        while (!at_end() && std::isalnum(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        std::string ident(src_.substr(start, pos_ - start));
        throw UnknownGenerator(ident, start);
    }

    std::string_view src_;
    ExprContext ctx_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class C>
NCPoly<C> parse_poly(std::string_view text, const ExprContext& ctx) {
    return detail::PolyParser<C>(text, ctx).parse();
}

/// Parses a scalar of F(q), e.g. "(1-q^2)/(1+q)".
template <class C>
C parse_scalar(std::string_view text, bool gaussian_mode = false) {
    ExprContext ctx{0, gaussian_mode, false};
    NCPoly<C> p = parse_poly<C>(text, ctx);
    if (!p.is_scalar()) throw SyntaxError("expected a scalar expression", 0);
    return p.scalar_value();
}

template <class C>
std::string format_scalar(const C& c) {
    return c.str();
}

/// Deterministic text with parse_poly(format_poly(a)) == a.
template <class C>
std::string format_poly(const NCPoly<C>& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (const auto& [w, c0] : a.terms()) {
        bool negative = c0.str().front() == '-';
        C c = negative ? -c0 : c0;
        std::string body;
        if (w.empty()) {
            body = c.is_constant() ? c.str() : "(" + c.str() + ")";
        } else if (c.is_one()) {
            body = w.str();
        } else {
            body = "(" + c.str() + ") " + w.str();
        }
        if (out.empty()) {
            out = negative ? "-" + body : body;
        } else {
            out += negative ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

}  // namespace qsphere
