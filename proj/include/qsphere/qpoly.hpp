#pragma once

/**
 * @file qpoly.hpp
 * @brief Dense univariate polynomials in the deformation parameter q.
 *
 * Coefficients live in an exact field F (Rational or Gaussian). The
 * coefficient vector is indexed by the exponent of q and never has a
 * trailing zero, so the zero polynomial is the empty vector and equality
 * is plain vector equality.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace qsphere {

/// Unit u such that p / u is the canonical associate of p (p nonzero).
/// Over Q: sign of the leading coefficient times the content, leaving a
/// primitive integer polynomial with positive leading coefficient.
inline Rational normalizing_unit(const std::vector<Rational>& coeffs) {
    mpz_class num_gcd = 0;
    mpz_class den_lcm = 1;
    for (const auto& c : coeffs) {
        if (c.is_zero()) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.gmp().get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.gmp().get_den_mpz_t());
    }
    Rational content(num_gcd, den_lcm);
    return coeffs.back().sign() < 0 ? -content : content;
}

/// Over Q(i) the canonical associate is the monic one.
inline Gaussian normalizing_unit(const std::vector<Gaussian>& coeffs) { return coeffs.back(); }

template <class F>
class Poly {
public:
    Poly() = default;
    Poly(F constant) {  // NOLINT(google-explicit-constructor)
        if (!qsphere::is_zero(constant)) coeffs_.push_back(std::move(constant));
    }
    Poly(long constant) : Poly(F(constant)) {}  // NOLINT(google-explicit-constructor)
    explicit Poly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    /// c q^k
    static Poly monomial(F c, std::size_t k) {
        if (qsphere::is_zero(c)) return {};
        std::vector<F> v(k + 1, F(0));
        v[k] = std::move(c);
        return Poly(std::move(v));
    }
    static Poly q() { return monomial(F(1), 1); }

    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == F(1); }
    /// Degree; -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    /// Exponent of the lowest nonzero term; -1 for zero.
    long valuation() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!qsphere::is_zero(coeffs_[i])) return static_cast<long>(i);
        return -1;
    }
    /// True when exactly one coefficient is nonzero.
    bool is_monomial() const { return !is_zero() && valuation() == degree(); }

    const std::vector<F>& coefficients() const noexcept { return coeffs_; }
    F coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
    const F& leading() const { return coeffs_.back(); }
    F constant_term() const { return coefficient(0); }

    Poly operator-() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<F> r(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (qsphere::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                if (qsphere::is_zero(b.coeffs_[j])) continue;
                r[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return Poly(std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const F& s) const {
        if (qsphere::is_zero(s)) return {};
        Poly r = *this;
        for (auto& c : r.coeffs_) c *= s;
        return r;
    }

    /// Multiply by q^k.
    Poly shifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<F> v(k, F(0));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        Poly r;
        r.coeffs_ = std::move(v);
        return r;
    }

    /// Divide by q^k; requires valuation() >= k.
    Poly unshifted(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Poly r;
        r.coeffs_.assign(coeffs_.begin() + static_cast<long>(k), coeffs_.end());
        return r;
    }

    /// Euclidean division: returns (quotient, remainder). Divisor nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw DivisionByZero();
        Poly rem = *this;
        if (rem.degree() < d.degree()) return {Poly{}, rem};
        std::vector<F> quot(static_cast<std::size_t>(rem.degree() - d.degree() + 1), F(0));
        F inv_lead = F(1) / d.leading();
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            auto shift = static_cast<std::size_t>(rem.degree() - d.degree());
            F factor = rem.leading() * inv_lead;
            for (std::size_t i = 0; i < d.coeffs_.size(); ++i)
                rem.coeffs_[i + shift] -= factor * d.coeffs_[i];
            // leading term cancels exactly
            rem.coeffs_.pop_back();
            rem.trim();
            quot[shift] = std::move(factor);
        }
        return {Poly(std::move(quot)), rem};
    }

    /// Exact division; throws if d does not divide *this.
    Poly exact_div(const Poly& d) const {
        if (d.is_monomial() && valuation() >= d.valuation()) {
            return unshifted(static_cast<std::size_t>(d.valuation())).scaled(F(1) / d.leading());
        }
        auto [quot, rem] = divmod(d);
        if (!rem.is_zero()) throw Error("internal: inexact polynomial division");
        return quot;
    }

    /// Canonical associate (see normalizing_unit).
    Poly normalized() const {
        if (is_zero()) return {};
        return scaled(F(1) / normalizing_unit(coeffs_));
    }

    F eval(const F& at) const {
        F acc(0);
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= at;
            acc += *it;
        }
        return acc;
    }

    Poly conjugated() const {
        Poly r = *this;
        for (auto& c : r.coeffs_) c = conj(c);
        return r;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    /// Text form: ascending sum of c*q^k terms, e.g. "1-q^2" or "1/2*q".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const F& c = coeffs_[k];
            if (qsphere::is_zero(c)) continue;
            std::string term;
            std::string qpow = k == 1 ? "q" : "q^" + std::to_string(k);
            if (k == 0) {
                term = to_string(c);
            } else if (c == F(1)) {
                term = qpow;
            } else if (c == F(-1)) {
                term = "-" + qpow;
            } else {
                term = to_string(c) + "*" + qpow;
            }
            if (!out.empty() && term.front() != '-') out += "+";
            out += term;
        }
        return out;
    }

    std::size_t term_count() const {
        return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(),
                                                       [](const F& c) { return !qsphere::is_zero(c); }));
    }

private:
    void trim() {
        while (!coeffs_.empty() && qsphere::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<F> coeffs_;
};

/// Monic gcd over F; gcd(0, 0) = 0.
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    if (a.is_zero()) return b.is_zero() ? b : b.scaled(F(1) / b.leading());
    if (b.is_zero()) return a.scaled(F(1) / a.leading());
    // q-power fast path: gcd with a monomial is a power of q
    if (a.is_monomial() || b.is_monomial()) {
        auto k = static_cast<std::size_t>(std::min(a.valuation(), b.valuation()));
        return Poly<F>::monomial(F(1), k);
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        auto r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.scaled(F(1) / a.leading());
}

}  // namespace qsphere
