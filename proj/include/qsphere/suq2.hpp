#pragma once

/**
 * @file suq2.hpp
 * @brief Arithmetic of A(SU_q(2)) in the basis e(j,k,l).
 *
 * With alpha = z0 and beta = z1,
 *
 *   e(j,k,l) = alpha^j beta^k beta*^l        (j >= 0)
 *   e(j,k,l) = beta^k beta*^l alpha*^{-j}    (j < 0)
 *
 * which is a basis for q != 0. Products are computed in closed form from
 * the commutation rules
 *
 *   B alpha^d   = q^{d(k+l)} alpha^d B,     alpha*^d B = q^{d(k+l)} B alpha*^d
 *
 * for B = beta^k beta*^l, together with the product formulas for
 * alpha^j alpha*^k and alpha*^a alpha^b as polynomials in t = beta beta*.
 * The rewrite engine is kept as an independent oracle for all of this.
 */

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "rewrite.hpp"

namespace qsphere {

struct BasisTerm {
    long j = 0;
    unsigned long k = 0;
    unsigned long l = 0;

    unsigned long degree() const noexcept { return k + l; }

    friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
    /// Ordered by filtration degree first, then (j, k).
    friend std::strong_ordering operator<=>(const BasisTerm& a, const BasisTerm& b) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.j <=> b.j; c != 0) return c;
        return a.k <=> b.k;
    }

    std::string str() const {
        return "e(" + std::to_string(j) + "," + std::to_string(k) + "," + std::to_string(l) + ")";
    }
};

/// Filtration degree: min(k+l) over the support, infinite for zero.
class FiltrationDegree {
public:
    FiltrationDegree() = default;  // infinite
    explicit FiltrationDegree(unsigned long v) : value_(v) {}

    static FiltrationDegree infinite() { return {}; }

    bool is_infinite() const noexcept { return !value_.has_value(); }
    unsigned long value() const { return *value_; }
    /// x in V_m
    bool at_least(unsigned long m) const noexcept { return !value_ || *value_ >= m; }

    friend bool operator==(const FiltrationDegree&, const FiltrationDegree&) = default;
    friend std::strong_ordering operator<=>(const FiltrationDegree& a, const FiltrationDegree& b) {
        if (!a.value_ || !b.value_) {
            if (!a.value_ && !b.value_) return std::strong_ordering::equal;
            return !a.value_ ? std::strong_ordering::greater : std::strong_ordering::less;
        }
        return *a.value_ <=> *b.value_;
    }

    std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }

private:
    std::optional<unsigned long> value_;
};

inline FiltrationDegree operator+(const FiltrationDegree& a, const FiltrationDegree& b) {
    if (a.is_infinite() || b.is_infinite()) return FiltrationDegree::infinite();
    return FiltrationDegree(a.value() + b.value());
}

template <class C>
class BasisVector {
public:
    using term_map = std::map<BasisTerm, C>;

    /// The zero vector of A(SU_q(2)) with parameter qmode. Throws for q = 0.
    explicit BasisVector(QMode qmode = QMode::symbolic()) : qmode_(std::move(qmode)) {
        if (qmode_.is_zero()) throw QZeroUnsupported();
        qmode_.require_unit_interval();
    }
    BasisVector(QMode qmode, const BasisTerm& t, const C& c = C(1)) : BasisVector(std::move(qmode)) {
        add_term(t, c);
    }

    const QMode& qmode() const noexcept { return qmode_; }
    const term_map& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    C coefficient(const BasisTerm& t) const {
        auto it = terms_.find(t);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const BasisTerm& t, const C& c) {
        if (qsphere::is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(t, specialize(c, qmode_));
        if (!inserted) {
            it->second += specialize(c, qmode_);
            if (qsphere::is_zero(it->second)) terms_.erase(it);
        }
    }

    BasisVector operator-() const {
        BasisVector r(qmode_);
        for (const auto& [t, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), t, -c);
        return r;
    }
    BasisVector& operator+=(const BasisVector& o) {
        check_compatible(o);
        for (const auto& [t, c] : o.terms_) add_term(t, c);
        return *this;
    }
    BasisVector& operator-=(const BasisVector& o) {
        check_compatible(o);
        for (const auto& [t, c] : o.terms_) add_term(t, -c);
        return *this;
    }
    friend BasisVector operator+(BasisVector a, const BasisVector& b) { return a += b; }
    friend BasisVector operator-(BasisVector a, const BasisVector& b) { return a -= b; }

    BasisVector scaled(const C& s) const {
        BasisVector r(qmode_);
        if (qsphere::is_zero(s)) return r;
        for (const auto& [t, c] : terms_) r.add_term(t, c * s);
        return r;
    }

    /// Terms with k+l < m, i.e. the class modulo V_m.
    BasisVector truncated_below(unsigned long m) const {
        BasisVector r(qmode_);
        for (const auto& [t, c] : terms_)
            if (t.degree() < m) r.terms_.emplace_hint(r.terms_.end(), t, c);
        return r;
    }

    /// Terms with k+l == m.
    BasisVector level(unsigned long m) const {
        BasisVector r(qmode_);
        for (const auto& [t, c] : terms_)
            if (t.degree() == m) r.terms_.emplace_hint(r.terms_.end(), t, c);
        return r;
    }

    friend bool operator==(const BasisVector& a, const BasisVector& b) {
        return a.qmode_ == b.qmode_ && a.terms_ == b.terms_;
    }

    void check_compatible(const BasisVector& o) const {
        if (!(qmode_ == o.qmode_))
            throw Error("basis vectors over different parameters: q = " + qmode_.str() + " vs q = " + o.qmode_.str());
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [t, c0] : terms_) {
            bool negative = c0.str().front() == '-';
            C c = negative ? -c0 : c0;
            if (!out.empty()) out += negative ? " - " : " + ";
            else if (negative) out = "-";
            out += c.is_one() ? t.str() : "(" + c.str() + ") " + t.str();
        }
        return out;
    }

private:
    QMode qmode_;
    term_map terms_;
};

template <class C>
BasisVector<C> basis_element(const QMode& qmode, long j, unsigned long k, unsigned long l, const C& c = C(1)) {
    return BasisVector<C>(qmode, BasisTerm{j, k, l}, c);
}

template <class C>
FiltrationDegree filtration_degree(const BasisVector<C>& x) {
    if (x.is_zero()) return FiltrationDegree::infinite();
    unsigned long m = std::numeric_limits<unsigned long>::max();
    for (const auto& [t, c] : x.terms()) m = std::min(m, t.degree());
    return FiltrationDegree(m);
}

/// e(j,k,l)* = e(-j,l,k), extended antilinearly.
template <class C>
BasisVector<C> basis_star(const BasisVector<C>& x) {
    BasisVector<C> r(x.qmode());
    for (const auto& [t, c] : x.terms()) r.add_term(BasisTerm{-t.j, t.l, t.k}, conj(c));
    return r;
}

namespace detail {

/// Polynomial in t = beta beta*, keyed by the power of t.
template <class C>
using TPoly = std::map<unsigned long, C>;

template <class C>
TPoly<C> tpoly_mul_linear(const TPoly<C>& p, const C& lin) {
    // p * (1 - lin t)
    TPoly<C> r;
    auto add = [&r](unsigned long e, const C& c) {
        auto [it, ins] = r.try_emplace(e, c);
        if (!ins) it->second += c;
    };
    for (const auto& [e, c] : p) {
        add(e, c);
        add(e + 1, -(c * lin));
    }
    std::erase_if(r, [](const auto& kv) { return qsphere::is_zero(kv.second); });
    return r;
}

/// alpha^d P(t) with d signed: d < 0 means alpha*^{-d}.
template <class C>
struct AlphaT {
    long d = 0;
    TPoly<C> poly;
};

/// alpha^j alpha*^k = alpha^{j-k} prod_{p=0}^{k-1} (1 - q^{-2p} t)                (j >= k)
///                  = alpha*^{k-j} prod_{p=k-j}^{k-1} (1 - q^{-2p} t)             (j < k)
template <class C>
AlphaT<C> alpha_then_star(unsigned long j, unsigned long k, const QMode& qm) {
    AlphaT<C> out;
    out.poly[0] = C(1);
    unsigned long first = j >= k ? 0 : k - j;
    out.d = static_cast<long>(j) - static_cast<long>(k);
    for (unsigned long p = first; p < k; ++p)
        out.poly = tpoly_mul_linear(out.poly, qm.template q_power<C>(-2 * static_cast<long>(p)));
    return out;
}

/// alpha*^a alpha^b = alpha*^{a-m} alpha^{b-m} prod_{p=0}^{m-1} (1 - q^{2(b-p)} t),  m = min(a,b)
template <class C>
AlphaT<C> star_then_alpha(unsigned long a, unsigned long b, const QMode& qm) {
    AlphaT<C> out;
    out.poly[0] = C(1);
    unsigned long m = std::min(a, b);
    out.d = static_cast<long>(b) - static_cast<long>(a);
    for (unsigned long p = 0; p < m; ++p)
        out.poly = tpoly_mul_linear(out.poly, qm.template q_power<C>(2 * static_cast<long>(b - p)));
    return out;
}

}  // namespace detail

/// alpha^j alpha*^k expanded in the basis.
template <class C>
BasisVector<C> alpha_power_product(unsigned long j, unsigned long k, const QMode& qmode = QMode::symbolic()) {
    BasisVector<C> r(qmode);
    auto at = detail::alpha_then_star<C>(j, k, qmode);
    for (const auto& [c, coeff] : at.poly) {
        if (at.d >= 0) {
            r.add_term(BasisTerm{at.d, c, c}, coeff);
        } else {
            // alpha*^{|d|} t^c = q^{2c|d|} t^c alpha*^{|d|}
            r.add_term(BasisTerm{at.d, c, c}, coeff * qmode.template q_power<C>(2 * static_cast<long>(c) * -at.d));
        }
    }
    return r;
}

/// Product of two basis elements.
template <class C>
BasisVector<C> term_product(const BasisTerm& x, const BasisTerm& y, const QMode& qm) {
    BasisVector<C> r(qm);
    const long k1 = static_cast<long>(x.degree());
    const long k2 = static_cast<long>(y.degree());
    const unsigned long kt = x.k + y.k;
    const unsigned long lt = x.l + y.l;
    auto qp = [&qm](long e) { return qm.template q_power<C>(e); };

    if (x.j >= 0 && y.j >= 0) {
        r.add_term(BasisTerm{x.j + y.j, kt, lt}, qp(y.j * k1));
    } else if (x.j < 0 && y.j < 0) {
        r.add_term(BasisTerm{x.j + y.j, kt, lt}, qp(-x.j * k2));
    } else if (x.j >= 0) {
        // alpha^j B1 B2 alpha*^a = q^{-j(K1+K2)} B alpha^j alpha*^a
        auto at = detail::alpha_then_star<C>(static_cast<unsigned long>(x.j), static_cast<unsigned long>(-y.j), qm);
        const C front = qp(-x.j * (k1 + k2));
        for (const auto& [c, coeff] : at.poly) {
            long e = at.d >= 0 ? at.d * (k1 + k2) : 2 * static_cast<long>(c) * -at.d;
            r.add_term(BasisTerm{at.d, kt + c, lt + c}, front * coeff * qp(e));
        }
    } else {
        // B1 alpha*^a alpha^b B2
        auto at = detail::star_then_alpha<C>(static_cast<unsigned long>(-x.j), static_cast<unsigned long>(y.j), qm);
        for (const auto& [c, coeff] : at.poly) {
            long e = at.d >= 0 ? at.d * k1 : -at.d * (k2 + 2 * static_cast<long>(c));
            r.add_term(BasisTerm{at.d, kt + c, lt + c}, coeff * qp(e));
        }
    }
    return r;
}

template <class C>
BasisVector<C> basis_product(const BasisVector<C>& x, const BasisVector<C>& y) {
    x.check_compatible(y);
    BasisVector<C> r(x.qmode());
    for (const auto& [tx, cx] : x.terms())
        for (const auto& [ty, cy] : y.terms()) {
            C c = cx * cy;
            const BasisVector<C> part = term_product<C>(tx, ty, x.qmode());
            for (const auto& [t, d] : part.terms()) r.add_term(t, c * d);
        }
    return r;
}

template <class C>
BasisVector<C> operator*(const BasisVector<C>& x, const BasisVector<C>& y) {
    return basis_product(x, y);
}

/// Canonical embedding into the n = 1 free algebra (alpha = z0, beta = z1).
template <class C>
NCPoly<C> basis_to_poly(const BasisVector<C>& x) {
    NCPoly<C> r(1);
    for (const auto& [t, c] : x.terms()) r.add_term(basis_word(t.j, t.k, t.l), c);
    return r;
}

/// Reads off basis coordinates of an irreducible n = 1 word.
inline BasisTerm basis_term_of(const Word& w) {
    if (!is_pbw_word(w) || w.max_index() > 1) throw Error("word " + w.str() + " is not an n = 1 normal word");
    auto a = static_cast<long>(w.count(z(0)));
    auto b = static_cast<long>(w.count(zs(0)));
    return BasisTerm{a > 0 ? a : -b, w.count(z(1)), w.count(zs(1))};
}

/// Expands an n = 1 polynomial in the basis by normalizing it first.
template <class C>
BasisVector<C> word_to_basis(const NCPoly<C>& a, Normalizer<C>& norm) {
    const QMode& qm = norm.rules().qmode();
    if (qm.is_zero()) throw QZeroUnsupported();
    if (a.arity() != 1) throw ArityMismatch(a.arity(), 1);
    BasisVector<C> r(qm);
    const NCPoly<C> nf = norm.reduce(a);
    for (const auto& [w, c] : nf.terms()) r.add_term(basis_term_of(w), c);
    return r;
}

template <class C>
BasisVector<C> word_to_basis(const NCPoly<C>& a, const QMode& qmode = QMode::symbolic()) {
    if (qmode.is_zero()) throw QZeroUnsupported();
    RuleSet<C> rules(1, qmode);
    Normalizer<C> norm(rules);
    return word_to_basis(a, norm);
}

template <class C>
BasisVector<C> word_to_basis(const NormalForm<C>& a, const QMode& qmode = QMode::symbolic()) {
    return word_to_basis(a.value(), qmode);
}

/// e(j,k,l) = coeff * e(rest) * g with g = beta (k >= 1) or beta* (k = 0, l >= 1).
template <class C>
struct BetaFactorization {
    BasisTerm rest;
    bool starred = false;  ///< g = beta*
    C coeff;
};

/// Factors a basis term of positive degree through beta or beta* on the right.
/// Throws InvalidRange for degree 0.
template <class C>
BetaFactorization<C> factor_through_beta(const BasisTerm& t, const QMode& qm) {
    if (t.degree() == 0) throw InvalidRange(t.str() + " has degree 0 and does not factor through beta");
    const bool starred = t.k == 0;
    BasisTerm rest{t.j, starred ? t.k : t.k - 1, starred ? t.l - 1 : t.l};
    BasisVector<C> g = basis_element<C>(qm, 0, starred ? 0 : 1, starred ? 1 : 0);
    BasisVector<C> prod = basis_product(BasisVector<C>(qm, rest), g);
    if (prod.size() != 1 || prod.terms().begin()->first != t)
        throw Error("internal: " + rest.str() + " times " + (starred ? "beta*" : "beta") + " is not a multiple of " + t.str());
    // e(j,k,l) = prod / c
    return BetaFactorization<C>{rest, starred, C(1) / prod.terms().begin()->second};
}

/// The generators as basis vectors.
template <class C>
struct SUq2Generators {
    BasisVector<C> alpha, alpha_star, beta, beta_star;

    explicit SUq2Generators(const QMode& qm)
        : alpha(basis_element<C>(qm, 1, 0, 0)),
          alpha_star(basis_element<C>(qm, -1, 0, 0)),
          beta(basis_element<C>(qm, 0, 1, 0)),
          beta_star(basis_element<C>(qm, 0, 0, 1)) {}

    const BasisVector<C>& letter(Letter l) const {
        if (l.index == 0) return l.starred ? alpha_star : alpha;
        if (l.index == 1) return l.starred ? beta_star : beta;
        throw Error("SU_q(2) has only the generators z0 and z1");
    }
};

/// Evaluates a free-algebra polynomial letter by letter with basis_product only.
template <class C>
BasisVector<C> evaluate_in_basis(const NCPoly<C>& a, const QMode& qm) {
    SUq2Generators<C> g(qm);
    BasisVector<C> r(qm);
    for (const auto& [w, c] : a.terms()) {
        BasisVector<C> acc = basis_element<C>(qm, 0, 0, 0);
        for (const auto& l : w) acc = basis_product(acc, g.letter(l));
        r += acc.scaled(c);
    }
    return r;
}

}  // namespace qsphere
