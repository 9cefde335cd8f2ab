#pragma once

/**
 * @file descent.hpp
 * @brief Filtration descent against A(SU_q'(2)) and the obstruction pipeline.
 *
 * For a candidate phi with phi(z_0) = lambda g + x, g = alpha (case A) or
 * alpha* (case B), x in V_1, the relation z_i z_0 = q z_0 z_i says
 *
 *   lambda T(y) + (y x - q x y) = 0,   T(y) = y g - q g y,   y = phi(z_i).
 *
 * If y lies in V_m then y x - q x y lies in V_{m+1}, and modulo V_{m+2}
 *
 *   T(e(j,k,l)) = f(j, k+l) e(j +- 1, k, l)
 *
 * with a scalar factor f. A nonzero factor forces the coefficient of
 * e(j,k,l) to vanish, so y descends into V_{m+1}. Iterating to depth M
 * certifies that every coefficient of degree <= M vanishes.
 */

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "errors.hpp"
#include "laurent.hpp"
#include "quotients.hpp"
#include "suq2.hpp"

namespace qsphere {

enum class DescentCase { A, B };

inline std::string to_string(DescentCase c) { return c == DescentCase::A ? "A" : "B"; }

// ---------------------------------------------------------------------------
// is_power

struct PowerWitness {
    std::optional<long> m;  ///< q = q'^m
    bool is_some() const noexcept { return m.has_value(); }
};

/// Exact search for m >= 1 with qp^m = q. Stops once qp^m < q.
inline PowerWitness is_power(const Rational& q, const Rational& qp) {
    if (q.sign() < 0 || q >= Rational(1)) throw InvalidRange("q = " + q.str() + " is not in [0,1)");
    if (qp.sign() <= 0 || qp >= Rational(1)) throw InvalidRange("q' = " + qp.str() + " is not in (0,1)");
    if (q.is_zero()) return {};
    Rational p = qp;
    for (long m = 1;; ++m, p *= qp) {
        if (p == q) return {m};
        if (p < q) return {};
    }
}

// ---------------------------------------------------------------------------
// Decomposition of the z0 image

template <class C>
struct Lemma10Form {
    DescentCase which = DescentCase::A;
    C lambda;
    BasisVector<C> x;
};

/// The circle part of phi(z_0) is not lambda u^{+-1} with |lambda| = 1.
template <class C>
struct NotOfForm {
    LaurentPoly<C> circle_part;
    std::string reason;
};

template <class C>
using Lemma10Result = std::variant<Lemma10Form<C>, NotOfForm<C>>;

/// Sum of y(j,0,0) u^j: the class of y in V_0 / V_1 = A(S^1).
template <class C>
LaurentPoly<C> circle_part(const BasisVector<C>& y) {
    LaurentPoly<C> out;
    for (const auto& [t, c] : y.terms())
        if (t.degree() == 0) out.add_term(t.j, c);
    return out;
}

template <class C>
Lemma10Result<C> lemma10_decompose(const BasisVector<C>& img_z0) {
    LaurentPoly<C> part = circle_part(img_z0);
    auto verdict = is_unitary_laurent(part);
    if (const auto* nu = std::get_if<NotUnitary<C>>(&verdict))
        return NotOfForm<C>{part, "circle part " + part.str() + " is not unitary (coefficient " + to_string(nu->coefficient) +
                                      " at u^" + std::to_string(nu->exponent) + " in a a* - 1)"};
    const auto& u = std::get<Unitary<C>>(verdict);
    if (u.j != 1 && u.j != -1)
        return NotOfForm<C>{part, "circle part " + part.str() + " is a unitary of degree " + std::to_string(u.j) + ", not +-1"};
    DescentCase which = u.j == 1 ? DescentCase::A : DescentCase::B;
    BasisVector<C> x = img_z0 - basis_element<C>(img_z0.qmode(), u.j, 0, 0, u.lambda);
    return Lemma10Form<C>{which, u.lambda, std::move(x)};
}

// ---------------------------------------------------------------------------
// Descent steps

/// The scalar factor f(j, K) of T(e(j,k,l)) for K = k+l.
template <class C>
C descent_factor(long j, unsigned long K, const C& q, const QMode& qprime, DescentCase which) {
    const long k = static_cast<long>(K);
    auto qp = [&qprime](long e) { return qprime.template q_power<C>(e); };
    if (which == DescentCase::A) return j >= 0 ? qp(k) - q : C(1) - q * qp(-k);
    return j <= 0 ? C(1) - q * qp(k) : qp(-k) - q;
}

/// y g - q g y
template <class C>
BasisVector<C> descent_operator(const BasisVector<C>& y, const C& q, DescentCase which) {
    BasisVector<C> g = basis_element<C>(y.qmode(), which == DescentCase::A ? 1 : -1, 0, 0);
    return basis_product(y, g) - basis_product(g, y).scaled(q);
}

template <class C>
struct DescentCondition {
    BasisTerm term;
    C factor;
};

template <class C>
struct DescentReport {
    unsigned long m = 0;
    DescentCase which = DescentCase::A;
    std::vector<DescentCondition<C>> conditions;  ///< support terms of degree m
    bool forced_zero = false;
    BasisVector<C> updated;  ///< y with every forced coefficient removed
    bool factors_match = false;  ///< factors reproduce T(y) mod V_{m+2}
    std::optional<bool> remainder_ok;  ///< y x - q x y in V_{m+1}, when x is supplied
};

/// Factor prediction for T(y) modulo V_{m+2}, from the terms of degree m and m+1.
template <class C>
BasisVector<C> predicted_descent_image(const BasisVector<C>& y, unsigned long m, const C& q, DescentCase which) {
    BasisVector<C> out(y.qmode());
    const long shift = which == DescentCase::A ? 1 : -1;
    for (const auto& [t, c] : y.terms()) {
        if (t.degree() != m && t.degree() != m + 1) continue;
        out.add_term(BasisTerm{t.j + shift, t.k, t.l}, c * descent_factor<C>(t.j, t.degree(), q, y.qmode(), which));
    }
    return out;
}

template <class C>
DescentReport<C> descent_step(const BasisVector<C>& y, unsigned long m, const Rational& q, DescentCase which,
                              const std::optional<BasisVector<C>>& x = std::nullopt) {
    FiltrationDegree deg = filtration_degree(y);
    if (!deg.at_least(m)) throw FiltrationViolation(static_cast<long>(deg.value()), static_cast<long>(m));
    if (q.sign() < 0 || q >= Rational(1)) throw InvalidQ(q.str());
    const C qc = from_rational<C>(q);

    DescentReport<C> rep;
    rep.m = m;
    rep.which = which;
    rep.forced_zero = true;
    rep.updated = BasisVector<C>(y.qmode());
    for (const auto& [t, c] : y.terms()) {
        if (t.degree() == m) {
            C f = descent_factor<C>(t.j, t.degree(), qc, y.qmode(), which);
            bool zero = qsphere::is_zero(f);
            rep.conditions.push_back({t, f});
            if (!zero) continue;
            rep.forced_zero = false;
        }
        rep.updated.add_term(t, c);
    }

    BasisVector<C> direct = descent_operator(y, qc, which).truncated_below(m + 2);
    rep.factors_match = direct == predicted_descent_image(y, m, qc, which);
    if (!rep.factors_match) throw Error("internal: descent factors disagree with the direct product at m = " + std::to_string(m));

    if (x) {
        BasisVector<C> rem = basis_product(y, *x) - basis_product(*x, y).scaled(qc);
        rep.remainder_ok = filtration_degree(rem).at_least(m + 1);
    }
    return rep;
}

template <class C>
struct ZeroCertificate {
    unsigned long depth = 0;
    std::vector<DescentReport<C>> steps;
    BasisVector<C> residual;  ///< terms of degree > depth, not constrained
};

template <class C>
struct Stalled {
    unsigned long m = 0;
    BasisTerm term;
    std::vector<DescentReport<C>> steps;
};

template <class C>
using DescentOutcome = std::variant<ZeroCertificate<C>, Stalled<C>>;

/// Runs descent_step for m = 1..M. Stops at the first zero factor.
template <class C>
DescentOutcome<C> run_descent(const BasisVector<C>& y, const Rational& q, DescentCase which, unsigned long M,
                              const std::optional<BasisVector<C>>& x = std::nullopt) {
    if (M < 1) throw InvalidRange("descent depth must be at least 1");
    FiltrationDegree deg = filtration_degree(y);
    if (!deg.at_least(1)) throw FiltrationViolation(static_cast<long>(deg.value()), 1);
    std::vector<DescentReport<C>> steps;
    BasisVector<C> cur = y;
    for (unsigned long m = 1; m <= M; ++m) {
        DescentReport<C> rep = descent_step(cur, m, q, which, x);
        bool forced = rep.forced_zero;
        cur = rep.updated;
        steps.push_back(std::move(rep));
        if (!forced) {
            for (const auto& cond : steps.back().conditions)
                if (qsphere::is_zero(cond.factor)) return Stalled<C>{m, cond.term, std::move(steps)};
        }
    }
    return ZeroCertificate<C>{M, std::move(steps), std::move(cur)};
}

// ---------------------------------------------------------------------------
// Obstruction pipeline

enum class StageVerdict { Pass, Fail, Skipped };

inline std::string to_string(StageVerdict v) {
    switch (v) {
        case StageVerdict::Pass: return "pass";
        case StageVerdict::Fail: return "fail";
        case StageVerdict::Skipped: return "skipped";
    }
    return "?";
}

enum class ObstructionOutcome {
    Obstructed,        ///< images of z_1..z_n certified zero to depth M, and phi is a homomorphism
    NoObstruction,     ///< q = q'^m in case A, or descent stalled
    NotHomomorphism,   ///< stage 1 failed
    BadZ0Image,        ///< stage 3 failed
};

inline std::string to_string(ObstructionOutcome o) {
    switch (o) {
        case ObstructionOutcome::Obstructed: return "obstructed";
        case ObstructionOutcome::NoObstruction: return "no_obstruction";
        case ObstructionOutcome::NotHomomorphism: return "not_homomorphism";
        case ObstructionOutcome::BadZ0Image: return "bad_z0_image";
    }
    return "?";
}

template <class C>
struct GeneratorDescent {
    int index = 0;
    std::optional<DescentOutcome<C>> outcome;
    std::string error;  ///< set when the image is not in V_1
};

template <class C>
struct ObstructionReport {
    unsigned long depth = 0;
    Rational q;
    Rational qprime;

    StageVerdict homomorphism = StageVerdict::Skipped;
    HomCheck<C> hom;

    PowerWitness power;

    StageVerdict decomposition = StageVerdict::Skipped;
    std::optional<Lemma10Result<C>> lemma10;

    StageVerdict descent = StageVerdict::Skipped;
    std::string descent_note;
    std::vector<GeneratorDescent<C>> generators;

    ObstructionOutcome outcome = ObstructionOutcome::NoObstruction;
    std::string conclusion;

    /// Every z_i image, i >= 1, was forced to vanish to depth M.
    bool descent_certified() const {
        if (descent != StageVerdict::Pass) return false;
        for (const auto& g : generators)
            if (!g.outcome || !std::holds_alternative<ZeroCertificate<C>>(*g.outcome)) return false;
        return true;
    }
};

/// All four stages run whenever their inputs exist, so a failed relation check
/// still shows what descent says about the images. The conclusion names the
/// first failing stage.
template <class C>
ObstructionReport<C> verify_nonvanishing_obstruction(const HomSpec<C>& spec, unsigned long M) {
    if (spec.target != TargetKind::SUq2) throw InvalidRange("obstruction target must be suq2");
    if (spec.target_q.is_symbolic() || spec.target_q.is_zero())
        throw InvalidRange("obstruction needs a fixed q' in (0,1)");
    if (M < 1) throw InvalidRange("descent depth must be at least 1");
    validate(spec);

    ObstructionReport<C> rep;
    rep.depth = M;
    rep.qprime = spec.target_q.value();
    // a symbolic source parameter is the same indeterminate as the target's
    rep.q = spec.source_q.is_symbolic() ? rep.qprime : spec.source_q.value();

    // (1)
    rep.hom = check_homomorphism(spec);
    rep.homomorphism = rep.hom.ok() ? StageVerdict::Pass : StageVerdict::Fail;

    // (2)
    rep.power = is_power(rep.q, rep.qprime);

    // (3)
    RuleSet<C> rules(1, spec.target_q);
    Normalizer<C> norm(rules);
    BasisVector<C> img0 = word_to_basis(spec.images[0], norm);
    rep.lemma10 = lemma10_decompose(img0);
    const auto* form = std::get_if<Lemma10Form<C>>(&*rep.lemma10);
    rep.decomposition = form ? StageVerdict::Pass : StageVerdict::Fail;

    // (4)
    if (!form) {
        rep.descent_note = "the z0 image is not of the form lambda alpha + x or lambda alpha* + x";
    } else if (form->which == DescentCase::A && rep.power.is_some()) {
        rep.descent_note = "descent not applicable: q = q'^" + std::to_string(*rep.power.m) + " makes a case A factor vanish";
    } else {
        bool all_certified = true;
        for (int i = 1; i <= spec.source_n; ++i) {
            GeneratorDescent<C> g;
            g.index = i;
            BasisVector<C> y = word_to_basis(spec.images[static_cast<std::size_t>(i)], norm);
            try {
                g.outcome = run_descent(y, rep.q, form->which, M, std::optional<BasisVector<C>>(form->x));
                if (!std::holds_alternative<ZeroCertificate<C>>(*g.outcome)) all_certified = false;
            } catch (const FiltrationViolation& e) {
                g.error = e.what();
                all_certified = false;
            }
            rep.generators.push_back(std::move(g));
        }
        rep.descent = all_certified ? StageVerdict::Pass : StageVerdict::Fail;
    }

    const std::string forced = (spec.source_n == 1 ? std::string("image of z_1")
                                                   : "images of z_1..z_" + std::to_string(spec.source_n)) +
                               " certified zero to depth " + std::to_string(M);
    if (rep.homomorphism == StageVerdict::Fail) {
        rep.outcome = ObstructionOutcome::NotHomomorphism;
        rep.conclusion = "fails at stage (1): relation " + rep.hom.violations.front().relation.str() +
                         " is violated, so the images do not define a homomorphism";
        if (rep.descent_certified()) rep.conclusion += "; independently, " + forced;
    } else if (rep.decomposition == StageVerdict::Fail) {
        rep.outcome = ObstructionOutcome::BadZ0Image;
        rep.conclusion = "fails at stage (3): " + std::get<NotOfForm<C>>(*rep.lemma10).reason;
    } else if (rep.descent == StageVerdict::Skipped) {
        rep.outcome = ObstructionOutcome::NoObstruction;
        rep.conclusion = "no obstruction: " + rep.descent_note;
    } else if (rep.descent_certified()) {
        rep.outcome = ObstructionOutcome::Obstructed;
        rep.conclusion = forced + ": surjectivity onto the noncommutative target is obstructed, since the quotient by "
                                  "the commutator ideal is the commutative algebra A(S^1) while A(SU_q'(2)) is not commutative";
    } else {
        rep.outcome = ObstructionOutcome::NoObstruction;
        rep.conclusion = "fails at stage (4): descent did not certify every z_i image";
    }
    return rep;
}

}  // namespace qsphere
