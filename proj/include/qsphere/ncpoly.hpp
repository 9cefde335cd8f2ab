#pragma once

/**
 * @file ncpoly.hpp
 * @brief Elements of the free *-algebra on {z_i, z_i*}, i = 0..n.
 *
 * An NCPoly is a finitely supported map Word -> C with no zero
 * coefficients. No relations are applied here; see rewrite.hpp.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "qrat.hpp"
#include "word.hpp"

namespace qsphere {

template <class C>
class NCPoly {
public:
    using coeff_type = C;
    using term_map = std::map<Word, C>;

    NCPoly() = default;
    explicit NCPoly(int arity) : arity_(arity) {}
    NCPoly(int arity, const C& constant) : arity_(arity) {
        if (!qsphere::is_zero(constant)) terms_.emplace(Word{}, constant);
    }
    NCPoly(int arity, const Word& w, const C& coeff = C(1)) : arity_(arity) {
        if (w.max_index() > arity) throw Error("word " + w.str() + " uses a generator beyond n = " + std::to_string(arity));
        if (!qsphere::is_zero(coeff)) terms_.emplace(w, coeff);
    }

    static NCPoly gen(int arity, int index, bool starred = false) {
        return NCPoly(arity, Word{Letter{index, starred}});
    }

    int arity() const noexcept { return arity_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    C coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? C(0) : it->second;
    }

    /// True when the polynomial is a scalar multiple of the identity.
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
    C scalar_value() const { return coefficient(Word{}); }

    void add_term(const Word& w, const C& c) {
        if (is_zero_coeff(c)) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_coeff(it->second)) terms_.erase(it);
        }
    }

    NCPoly operator-() const {
        NCPoly r(arity_);
        for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, -c);
        return r;
    }

    NCPoly& operator+=(const NCPoly& o) {
        check_arity(o);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o) {
        check_arity(o);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }
    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    NCPoly scaled(const C& s) const {
        NCPoly r(arity_);
        if (is_zero_coeff(s)) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), w, c * s);
        return r;
    }
    friend NCPoly operator*(const C& s, const NCPoly& a) { return a.scaled(s); }

    /// Free-algebra product: bilinear extension of concatenation.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        a.check_arity(b);
        NCPoly r(a.arity_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) r.add_term(wa * wb, ca * cb);
        return r;
    }
    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    friend bool operator==(const NCPoly& a, const NCPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    void check_arity(const NCPoly& o) const {
        if (arity_ != o.arity_) throw ArityMismatch(arity_, o.arity_);
    }

private:
    static bool is_zero_coeff(const C& c) { return qsphere::is_zero(c); }

    int arity_ = 0;
    term_map terms_;
};

template <class C>
NCPoly<C> poly_mul(const NCPoly<C>& a, const NCPoly<C>& b) {
    return a * b;
}

/// Antilinear antihomomorphism: reverse words, toggle stars, conjugate coefficients.
template <class C>
NCPoly<C> involution(const NCPoly<C>& a) {
    NCPoly<C> r(a.arity());
    for (const auto& [w, c] : a.terms()) r.add_term(w.star(), conj(c));
    return r;
}

/// a b - t b a, unreduced. t = 1 is the ordinary commutator.
template <class C>
NCPoly<C> q_commutator(const NCPoly<C>& a, const NCPoly<C>& b, const C& t) {
    a.check_arity(b);
    return a * b - (b * a).scaled(t);
}

template <class C>
NCPoly<C> commutator(const NCPoly<C>& a, const NCPoly<C>& b) {
    return q_commutator(a, b, C(1));
}

template <class C>
NCPoly<C> power(const NCPoly<C>& a, unsigned e) {
    NCPoly<C> r(a.arity(), C(1));
    for (unsigned i = 0; i < e; ++i) r = r * a;
    return r;
}

}  // namespace qsphere
