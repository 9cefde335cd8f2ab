#pragma once

/**
 * @file laurent.hpp
 * @brief The circle algebra A(S^1): Laurent polynomials in a unitary u.
 *
 * u* = u^{-1}, so the star sends c u^k to conj(c) u^{-k}.
 */

#include <map>
#include <string>
#include <variant>

#include "errors.hpp"
#include "qrat.hpp"

namespace qsphere {

template <class C>
class LaurentPoly {
public:
    using term_map = std::map<long, C>;

    LaurentPoly() = default;
    LaurentPoly(const C& c, long k = 0) { add_term(k, c); }  // NOLINT(google-explicit-constructor)

    static LaurentPoly u(long k = 1) { return LaurentPoly(C(1), k); }

    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    C coefficient(long k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(long k, const C& c) {
        if (qsphere::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (qsphere::is_zero(it->second)) terms_.erase(it);
        }
    }

    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), k, -c);
        return r;
    }
    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly r;
        for (const auto& [i, ci] : a.terms_)
            for (const auto& [j, cj] : b.terms_) r.add_term(i + j, ci * cj);
        return r;
    }

    LaurentPoly scaled(const C& s) const {
        LaurentPoly r;
        for (const auto& [k, c] : terms_) r.add_term(k, c * s);
        return r;
    }

    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// "(1) + (2) u^3 - u^-1", ascending exponents.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [k, c0] : terms_) {
            bool negative = to_string(c0).front() == '-';
            C c = negative ? -c0 : c0;
            std::string mono = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
            std::string term;
            if (mono.empty()) term = "(" + to_string(c) + ")";
            else if (c == C(1)) term = mono;
            else term = "(" + to_string(c) + ") " + mono;
            if (!out.empty()) out += negative ? " - " : " + ";
            else if (negative) out = "-";
            out += term;
        }
        return out;
    }

private:
    term_map terms_;
};

template <class C>
LaurentPoly<C> laurent_star(const LaurentPoly<C>& a) {
    LaurentPoly<C> r;
    for (const auto& [k, c] : a.terms()) r.add_term(-k, conj(c));
    return r;
}

/// Evaluates at u = lambda; lambda must be nonzero when negative powers occur.
template <class C>
C laurent_eval(const LaurentPoly<C>& a, const C& lambda) {
    C acc(0);
    for (const auto& [k, c] : a.terms()) {
        if (k < 0 && qsphere::is_zero(lambda)) throw DivisionByZero();
        acc += c * scalar_pow(lambda, k);
    }
    return acc;
}

template <class C>
struct Unitary {
    C lambda;
    long j = 0;
};

/// Evidence that a a* != 1: a nonzero coefficient of a a* - 1.
template <class C>
struct NotUnitary {
    long exponent = 0;
    C coefficient;
};

template <class C>
using UnitaryVerdict = std::variant<Unitary<C>, NotUnitary<C>>;

/// Decides a a* = 1 exactly.
template <class C>
UnitaryVerdict<C> is_unitary_laurent(const LaurentPoly<C>& a) {
    LaurentPoly<C> defect = a * laurent_star(a) - LaurentPoly<C>(C(1));
    if (defect.is_zero()) {
        // a a* = 1 forces a single term: the extreme exponents of a a* would otherwise survive
        const auto& [j, lambda] = *a.terms().begin();
        return Unitary<C>{lambda, j};
    }
    // report the top exponent, which is the i0 != i1 cross term when a has several terms
    const auto& [k, c] = *defect.terms().rbegin();
    return NotUnitary<C>{k, c};
}

/// |lambda| = 1 exactly.
template <class C>
bool is_unit_scalar(const C& lambda) {
    return lambda * conj(lambda) == C(1);
}

}  // namespace qsphere
