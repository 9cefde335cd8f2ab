#pragma once

/**
 * @file quotients.hpp
 * @brief Commutator-ideal certificates, the circle quotient, characters and
 *        homomorphism checking.
 *
 * Certificates follow the constructive recipe
 *
 *   z_j z_i*  = (1-q)^{-1} [z_j, z_i*]            (i != j)
 *   x_i       = (1-q^2)^{-1} [z_{i-1}*, z_{i-1}],  x_i = sum_{j>=i} z_j z_j*
 *   z_i z_i*  = x_i - x_{i+1}
 *   z_i       = sum_j z_j z_j* z_i
 *
 * and are never trusted: `verify_certificate` re-expands and normalizes.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "rewrite.hpp"

namespace qsphere {

// ---------------------------------------------------------------------------
// Ideal certificates

/// coeff * left * [x, y] * right
template <class C>
struct CommutatorTerm {
    C coeff;
    Word left;
    NCPoly<C> x;
    NCPoly<C> y;
    Word right;
};

template <class C>
struct IdealCertificate {
    int arity = 0;
    NCPoly<C> target;
    std::vector<CommutatorTerm<C>> terms;
};

/// The certificate expression expanded in the free algebra (not normalized).
template <class C>
NCPoly<C> expand_certificate(const IdealCertificate<C>& cert) {
    NCPoly<C> out(cert.arity);
    for (const auto& t : cert.terms) {
        NCPoly<C> l(cert.arity, t.left);
        NCPoly<C> r(cert.arity, t.right);
        out += (l * commutator(t.x, t.y) * r).scaled(t.coeff);
    }
    return out;
}

/// True iff the expansion normalizes to the normal form of the target.
template <class C>
bool verify_certificate(const IdealCertificate<C>& cert, Normalizer<C>& norm) {
    return norm.reduce(expand_certificate(cert)) == norm.reduce(cert.target);
}

template <class C>
bool verify_certificate(const IdealCertificate<C>& cert, const QMode& qmode = QMode::symbolic()) {
    RuleSet<C> rules(cert.arity, qmode);
    Normalizer<C> norm(rules);
    return verify_certificate(cert, norm);
}

namespace detail {

template <class C>
class CertificateBuilder {
public:
    CertificateBuilder(int n, const QMode& qm) : n_(n), qm_(qm) {}

    using Terms = std::vector<CommutatorTerm<C>>;

    NCPoly<C> g(int i, bool starred = false) const { return NCPoly<C>::gen(n_, i, starred); }
    C q() const { return qm_.template q<C>(); }

    /// z_j z_i*, i != j
    Terms mixed(int j, int i) const {
        return {{C(1) / (C(1) - q()), {}, g(j), g(i, true), {}}};
    }

    /// z_i* z_j = q z_j z_i*, i != j
    Terms mixed_reversed(int i, int j) const {
        return {{q() / (C(1) - q()), {}, g(j), g(i, true), {}}};
    }

    /// x_i = sum_{j >= i} z_j z_j*, 1 <= i <= n
    Terms tail(int i) const {
        C s = C(1) / (C(1) - q() * q());
        return {{s, {}, g(i - 1, true), g(i - 1), {}}};
    }

    /// z_i z_i*, i >= 1
    Terms diagonal(int i) const {
        Terms t = tail(i);
        if (i < n_) {
            for (auto term : tail(i + 1)) {
                term.coeff = -term.coeff;
                t.push_back(std::move(term));
            }
        }
        return t;
    }

    /// z_i = sum_{j != i} z_j (z_j* z_i) + (z_i z_i*) z_i, i >= 1
    Terms generator(int i) const {
        Terms out;
        for (int j = 0; j <= n_; ++j) {
            if (j == i) continue;
            for (auto t : mixed_reversed(j, i)) {
                t.left = Word{z(j)} * t.left;
                out.push_back(std::move(t));
            }
        }
        for (auto t : diagonal(i)) {
            t.right = t.right * Word{z(i)};
            out.push_back(std::move(t));
        }
        return out;
    }

    /// Certificate of the star: ([x,y])* = [y*, x*], and left/right swap.
    static Terms starred(const Terms& ts) {
        Terms out;
        for (const auto& t : ts)
            out.push_back({conj(t.coeff), t.right.star(), involution(t.y), involution(t.x), t.left.star()});
        return out;
    }

    Terms letter(Letter l) const {
        return l.starred ? starred(generator(l.index)) : generator(l.index);
    }

private:
    int n_;
    QMode qm_;
};

}  // namespace detail

/// Builds a commutator expression for `target` by the constructive recipe.
/// Recognized shapes (x_i, z_j z_i*, z_i z_i*) get their direct certificates;
/// anything else is normalized and certified word by word through one letter
/// of index >= 1. Throws NotCertifiable when a pure z_0 component remains.
template <class C>
IdealCertificate<C> commutator_ideal_certificate(int n, const NCPoly<C>& target, const QMode& qmode = QMode::symbolic()) {
    if (target.arity() != n) throw ArityMismatch(target.arity(), n);
    if (n < 1) throw NotCertifiable("the commutator ideal of A(S^1) is zero");
    detail::CertificateBuilder<C> b(n, qmode);
    IdealCertificate<C> cert{n, target, {}};
    auto append = [&cert](const typename detail::CertificateBuilder<C>::Terms& ts, const C& c) {
        for (auto t : ts) {
            t.coeff = t.coeff * c;
            cert.terms.push_back(std::move(t));
        }
    };

    // x_i: recognized as an exact sum
    for (int i = 1; i <= n; ++i) {
        NCPoly<C> x(n);
        for (int j = i; j <= n; ++j) x += b.g(j) * b.g(j, true);
        if (x == target) {
            append(b.tail(i), C(1));
            return cert;
        }
    }
    if (target.size() == 1) {
        const auto& [w, c] = *target.terms().begin();
        if (w.size() == 2 && !w[0].starred && w[1].starred) {
            int j = w[0].index, i = w[1].index;
            if (i != j) {
                append(b.mixed(j, i), c);
                return cert;
            }
            if (i >= 1) {
                append(b.diagonal(i), c);
                return cert;
            }
        }
    }

    RuleSet<C> rules(n, qmode);
    Normalizer<C> norm(rules);
    const NCPoly<C> nf = norm.reduce(target);
    for (const auto& [w, c] : nf.terms()) {
        std::size_t p = 0;
        while (p < w.size() && w[p].index == 0) ++p;
        if (p == w.size())
            throw NotCertifiable("component " + w.str() + " is a pure z0 word and survives in the circle quotient");
        auto ts = b.letter(w[p]);
        for (auto& t : ts) {
            t.left = w.slice(0, p) * t.left;
            t.right = t.right * w.slice(p + 1, w.size());
        }
        append(ts, c);
    }
    return cert;
}

// ---------------------------------------------------------------------------
// The circle quotient A(S^{2n+1}_q)/I_n = A(S^1)

/// Normalizes, drops words with a letter of index >= 1 and maps z0^a -> u^a, z0*^b -> u^-b.
template <class C>
LaurentPoly<C> project_to_circle(const NCPoly<C>& a, Normalizer<C>& norm) {
    LaurentPoly<C> out;
    const NCPoly<C> nf = norm.reduce(a);
    for (const auto& [w, c] : nf.terms()) {
        long e = 0;
        bool killed = false;
        for (const auto& l : w) {
            if (l.index != 0) {
                killed = true;
                break;
            }
            e += l.starred ? -1 : 1;
        }
        if (!killed) out.add_term(e, c);
    }
    return out;
}

template <class C>
LaurentPoly<C> project_to_circle(const NCPoly<C>& a, const QMode& qmode = QMode::symbolic()) {
    RuleSet<C> rules(a.arity(), qmode);
    Normalizer<C> norm(rules);
    return project_to_circle(a, norm);
}

/// chi_lambda(a): the circle projection evaluated at u = lambda, |lambda| = 1.
template <class C>
C character_eval(const NCPoly<C>& a, const C& lambda, Normalizer<C>& norm) {
    if (!is_unit_scalar(lambda)) throw NotUnit(to_string(lambda));
    return laurent_eval(project_to_circle(a, norm), lambda);
}

template <class C>
C character_eval(const NCPoly<C>& a, const C& lambda, const QMode& qmode = QMode::symbolic()) {
    RuleSet<C> rules(a.arity(), qmode);
    Normalizer<C> norm(rules);
    return character_eval(a, lambda, norm);
}

// ---------------------------------------------------------------------------
// Homomorphism checking

enum class TargetKind { Sphere, SUq2, Circle };

inline std::string to_string(TargetKind k) {
    switch (k) {
        case TargetKind::Sphere: return "sphere";
        case TargetKind::SUq2: return "suq2";
        case TargetKind::Circle: return "circle";
    }
    return "?";
}

/// A candidate unital *-homomorphism given on generators. Images of z_i* are
/// the stars of the images of z_i. The circle is the sphere with n = 0.
template <class C>
struct HomSpec {
    int source_n = 1;
    QMode source_q;
    TargetKind target = TargetKind::SUq2;
    int target_n = 1;  ///< only read for sphere targets
    QMode target_q;
    std::vector<NCPoly<C>> images;  ///< images[i] = phi(z_i), arity target_arity()

    int target_arity() const {
        switch (target) {
            case TargetKind::Sphere: return target_n;
            case TargetKind::SUq2: return 1;
            case TargetKind::Circle: return 0;
        }
        return 0;
    }
};

template <class C>
struct Violation {
    RelationId relation;
    NCPoly<C> residue;
};

template <class C>
struct HomCheck {
    std::vector<Violation<C>> violations;  ///< in the order of defining_relations
    bool ok() const noexcept { return violations.empty(); }
};

/// phi(a) in the free algebra of the target, unreduced.
template <class C>
NCPoly<C> substitute(const NCPoly<C>& a, const HomSpec<C>& spec) {
    if (a.arity() != spec.source_n) throw ArityMismatch(a.arity(), spec.source_n);
    const int m = spec.target_arity();
    std::vector<NCPoly<C>> img, img_star;
    for (const auto& p : spec.images) {
        img.push_back(p);
        img_star.push_back(involution(p));
    }
    NCPoly<C> out(m);
    for (const auto& [w, c] : a.terms()) {
        NCPoly<C> acc(m, C(1));
        for (const auto& l : w) {
            const auto& f = l.starred ? img_star[static_cast<std::size_t>(l.index)] : img[static_cast<std::size_t>(l.index)];
            acc = acc * f;
            if (acc.is_zero()) break;
        }
        out += acc.scaled(c);
    }
    return out;
}

template <class C>
void validate(const HomSpec<C>& spec) {
    if (static_cast<int>(spec.images.size()) != spec.source_n + 1)
        throw ArityMismatch(static_cast<int>(spec.images.size()) - 1, spec.source_n);
    for (const auto& p : spec.images)
        if (p.arity() != spec.target_arity()) throw ArityMismatch(p.arity(), spec.target_arity());
    spec.source_q.require_unit_interval();
    spec.target_q.require_unit_interval();
}

/// Substitutes the images into every defining relation of the source and
/// normalizes in the target. All violated relations are reported.
template <class C>
HomCheck<C> check_homomorphism(const HomSpec<C>& spec) {
    validate(spec);
    RuleSet<C> rules(spec.target_arity(), spec.target_q);
    Normalizer<C> norm(rules);
    HomCheck<C> out;
    for (const auto& rel : defining_relations<C>(spec.source_n, spec.source_q)) {
        NCPoly<C> residue = norm.reduce(substitute(rel.lhs_minus_rhs, spec));
        if (!residue.is_zero()) out.violations.push_back({rel.id, std::move(residue)});
    }
    return out;
}

/// The violation for one relation, if any.
template <class C>
const Violation<C>* find_violation(const HomCheck<C>& check, const RelationId& id) {
    for (const auto& v : check.violations)
        if (v.relation == id) return &v;
    return nullptr;
}

}  // namespace qsphere
