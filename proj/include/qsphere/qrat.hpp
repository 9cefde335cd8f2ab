#pragma once

/**
 * @file qrat.hpp
 * @brief The rational-function field F(q), F = Q or Q(i).
 *
 * A value is stored as a reduced fraction num/den with den the canonical
 * associate of its class (see normalizing_unit). Because the representative
 * is unique, structural equality is field equality and `is_zero` is exact.
 * Negative powers of q are ordinary fractions with a q^k denominator.
 */

#include <string>
#include <utility>

#include "qpoly.hpp"

namespace qsphere {

template <class F>
class RatFunc {
public:
    using scalar_type = F;
    using poly_type = Poly<F>;

    RatFunc() : den_(F(1)) {}
    RatFunc(long c) : num_(F(c)), den_(F(1)) {}      // NOLINT(google-explicit-constructor)
    RatFunc(F c) : num_(std::move(c)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly<F> p) : num_(std::move(p)), den_(F(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly<F> num, Poly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZero();
        reduce();
    }

    static RatFunc q() { return RatFunc(Poly<F>::q()); }
    /// q^k for any integer k.
    static RatFunc q_power(long k) {
        if (k >= 0) return RatFunc(Poly<F>::monomial(F(1), static_cast<std::size_t>(k)));
        RatFunc r;
        r.num_ = Poly<F>(F(1));
        r.den_ = Poly<F>::monomial(F(1), static_cast<std::size_t>(-k));
        return r;
    }

    const Poly<F>& num() const noexcept { return num_; }
    const Poly<F>& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_one() const { return den_.is_one() && num_.is_one(); }
    bool is_constant() const { return den_.is_one() && num_.is_constant(); }
    /// Value of a constant element; only meaningful when is_constant().
    F constant_value() const { return num_.constant_term(); }
    bool is_polynomial() const { return den_.is_one(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = add(*this, o, false); }
    RatFunc& operator-=(const RatFunc& o) { return *this = add(*this, o, true); }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b, false); }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, b, true); }

    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return {};
        if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_);
        if (a.is_constant()) return b.scaled(a.constant_value());
        if (b.is_constant()) return a.scaled(b.constant_value());
        Poly<F> g1 = gcd(a.num_, b.den_);
        Poly<F> g2 = gcd(b.num_, a.den_);
        RatFunc r;
        r.num_ = a.num_.exact_div(g1) * b.num_.exact_div(g2);
        r.den_ = a.den_.exact_div(g2) * b.den_.exact_div(g1);
        r.normalize_unit();
        return r;
    }

    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

    RatFunc inverse() const {
        if (is_zero()) throw DivisionByZero();
        RatFunc r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize_unit();
        return r;
    }

    RatFunc scaled(const F& s) const {
        if (qsphere::is_zero(s)) return {};
        RatFunc r = *this;
        r.num_ = r.num_.scaled(s);
        return r;
    }

    RatFunc pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        RatFunc base = *this, result(1);
        while (e > 0) {
            if (e & 1) result *= base;
            e >>= 1;
            if (e) base *= base;
        }
        return result;
    }

    /// Coefficient-wise conjugation; q is real so it is fixed.
    RatFunc conjugated() const {
        RatFunc r;
        r.num_ = num_.conjugated();
        r.den_ = den_.conjugated();
        return r;
    }

    /// Substitute q = q0. Throws PoleAtPoint when the reduced denominator vanishes there.
    F eval(const F& q0) const {
        F d = den_.eval(q0);
        if (qsphere::is_zero(d)) throw PoleAtPoint(to_string(q0));
        return num_.eval(q0) / d;
    }

    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    /// Text form, e.g. "(1-q^2)/(1+q)", "1/q^2", "8/9".
    std::string str() const {
        if (den_.is_one()) return num_.str();
        if (den_.str().front() == '-') return wrap(-num_) + "/" + wrap(-den_);
        return wrap(num_) + "/" + wrap(den_);
    }

private:
    static std::string wrap(const Poly<F>& p) {
        std::string s = p.str();
        if (p.term_count() == 1 && s.find_first_of("/*+") == std::string::npos &&
            (s.front() != '-' || s.find('-', 1) == std::string::npos))
            return s;
        return "(" + s + ")";
    }

    static RatFunc add(const RatFunc& a, const RatFunc& b, bool subtract) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return subtract ? -b : b;
        RatFunc r;
        if (a.den_ == b.den_) {
            r.num_ = subtract ? a.num_ - b.num_ : a.num_ + b.num_;
            r.den_ = a.den_;
            if (r.den_.is_one() || r.num_.is_zero()) {
                if (r.num_.is_zero()) r.den_ = Poly<F>(F(1));
                return r;
            }
            r.reduce();
            return r;
        }
        Poly<F> g = gcd(a.den_, b.den_);
        Poly<F> a_cof = b.den_.exact_div(g);
        Poly<F> b_cof = a.den_.exact_div(g);
        r.num_ = subtract ? a.num_ * a_cof - b.num_ * b_cof : a.num_ * a_cof + b.num_ * b_cof;
        r.den_ = a.den_ * a_cof;
        r.reduce();
        return r;
    }

    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<F>(F(1));
            return;
        }
        Poly<F> g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
        normalize_unit();
    }

    void normalize_unit() {
        F u = normalizing_unit(den_.coefficients());
        if (u == F(1)) return;
        F inv = F(1) / u;
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }

    Poly<F> num_;
    Poly<F> den_;
};

using QRat = RatFunc<Rational>;
using QRatI = RatFunc<Gaussian>;

template <class F>
bool is_zero(const RatFunc<F>& a) {
    return a.is_zero();
}
template <class F>
RatFunc<F> conj(const RatFunc<F>& a) {
    return a.conjugated();
}
template <class F>
std::string to_string(const RatFunc<F>& a) {
    return a.str();
}

/// Canonicalization entry point: builds the canonical representative of num/den.
template <class F>
RatFunc<F> canonical(Poly<F> num, Poly<F> den) {
    return RatFunc<F>(std::move(num), std::move(den));
}

template <class F>
bool qrat_is_zero(const RatFunc<F>& a) {
    return a.is_zero();
}

template <class F>
F qrat_eval(const RatFunc<F>& a, const F& q0) {
    return a.eval(q0);
}

}  // namespace qsphere
