#pragma once

/**
 * @file suites.hpp
 * @brief Seeded property suites driven by `qs verify-lemmas`.
 *
 * Each suite samples inputs from a std::mt19937_64 seeded by the caller and
 * checks one family of identities exactly. Verdicts never depend on the
 * seed: every property is universally quantified over the sampled region.
 */

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "descent.hpp"
#include "parser.hpp"
#include "quotients.hpp"
#include "rewrite.hpp"
#include "suq2.hpp"

namespace qsphere {

enum class SuiteVerdict { Pass, Fail, Skipped };

inline std::string to_string(SuiteVerdict v) {
    switch (v) {
        case SuiteVerdict::Pass: return "PASS";
        case SuiteVerdict::Fail: return "FAIL";
        case SuiteVerdict::Skipped: return "SKIPPED";
    }
    return "?";
}

struct SuiteResult {
    std::string name;
    SuiteVerdict verdict = SuiteVerdict::Pass;
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first_failure;
    std::string reason;  ///< why a suite was skipped
    double seconds = 0;
};

struct SuiteConfig {
    int max_n = 3;
    QMode qmode;
    std::uint64_t seed = 1;
    std::size_t schema_bound = 3;
    std::size_t samples = 200;
};

namespace detail {

class SuiteRun {
public:
    explicit SuiteRun(std::string name) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& what) {
        ++result_.checks;
        if (ok) return;
        if (result_.failures++ == 0) result_.first_failure = what();
    }

    SuiteResult finish(std::chrono::steady_clock::time_point start) {
        result_.verdict = result_.failures ? SuiteVerdict::Fail : SuiteVerdict::Pass;
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return result_;
    }

private:
    SuiteResult result_;
};

class Sampler {
public:
    /// At q = 0 coefficients avoid negative powers of q.
    explicit Sampler(std::uint64_t seed, const QMode& qmode = QMode::symbolic())
        : rng_(seed), min_q_power_(qmode.is_zero() ? 0 : -1) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    Poly<Rational> poly(long max_degree) {
        std::vector<Rational> c;
        for (long k = 0, d = integer(0, max_degree); k <= d; ++k) c.emplace_back(integer(-3, 3), integer(1, 3));
        return Poly<Rational>(std::move(c));
    }

    QRat qrat() {
        Poly<Rational> den = poly(2);
        while (den.is_zero()) den = poly(2);
        return QRat(poly(2), den);
    }

    /// Nonzero small constants and q-powers, the typical coefficients of the algebra.
    QRat coeff() {
        QRat c(Rational(integer(1, 4) * (coin() ? 1 : -1), integer(1, 2)));
        return c * QRat::q_power(integer(min_q_power_, 2));
    }

    Word word(int n, std::size_t max_len) {
        Word w;
        for (auto len = static_cast<std::size_t>(integer(0, static_cast<long>(max_len))); w.size() < len;)
            w.push_back(Letter{static_cast<int>(integer(0, n)), coin()});
        return w;
    }

    NCPoly<QRat> ncpoly(int n, std::size_t max_terms, std::size_t max_len) {
        NCPoly<QRat> a(n);
        for (auto t = integer(0, static_cast<long>(max_terms)); t > 0; --t) a.add_term(word(n, max_len), coeff());
        return a;
    }

    BasisTerm basis_term(long max_j, unsigned long min_deg, unsigned long max_deg) {
        auto d = static_cast<unsigned long>(integer(static_cast<long>(min_deg), static_cast<long>(max_deg)));
        auto k = static_cast<unsigned long>(integer(0, static_cast<long>(d)));
        return BasisTerm{integer(-max_j, max_j), k, d - k};
    }

private:
    std::mt19937_64 rng_;
    long min_q_power_;
};

}  // namespace detail

// ---------------------------------------------------------------------------

inline SuiteResult suite_coeffq(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("coeffq");
    detail::Sampler s(cfg.seed, cfg.qmode);
    for (std::size_t t = 0; t < cfg.samples; ++t) {
        QRat a = s.qrat(), b = s.qrat(), c = s.qrat();
        run.check((a + b) + c == a + (b + c), [&] { return "associativity at " + a.str(); });
        run.check(a * (b + c) == a * b + a * c, [&] { return "distributivity at " + a.str(); });
        if (!a.is_zero()) run.check(a * a.inverse() == QRat(1), [&] { return "inverse of " + a.str(); });
        run.check(canonical(a.num(), a.den()) == a, [&] { return "canonical form of " + a.str(); });
        Rational q0(s.integer(0, 9), 10);
        try {
            Rational lhs = (a * b).eval(q0);
            run.check(lhs == a.eval(q0) * b.eval(q0), [&] { return "evaluation at " + q0.str(); });
        } catch (const PoleAtPoint&) {
            // undefined on one side; the property only covers defined points
        }
    }
    return run.finish(start);
}

inline SuiteResult suite_ncpoly(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("ncpoly");
    detail::Sampler s(cfg.seed, cfg.qmode);
    for (std::size_t t = 0; t < cfg.samples; ++t) {
        int n = static_cast<int>(s.integer(1, cfg.max_n));
        auto a = s.ncpoly(n, 4, 3), b = s.ncpoly(n, 4, 3), c = s.ncpoly(n, 4, 3);
        NCPoly<QRat> one(n, QRat(1));
        run.check((a * b) * c == a * (b * c), [&] { return "associativity at " + format_poly(a); });
        run.check(one * a == a && a * one == a, [&] { return "unit at " + format_poly(a); });
        run.check(involution(a * b) == involution(b) * involution(a), [&] { return "antihomomorphism at " + format_poly(a); });
        run.check(involution(involution(a)) == a, [&] { return "involutive at " + format_poly(a); });
        run.check(commutator(a, b) == -commutator(b, a), [&] { return "antisymmetry at " + format_poly(a); });
    }
    return run.finish(start);
}

inline SuiteResult suite_parser(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("parser");
    detail::Sampler s(cfg.seed, cfg.qmode);
    for (std::size_t t = 0; t < cfg.samples; ++t) {
        int n = static_cast<int>(s.integer(0, cfg.max_n));
        auto a = s.ncpoly(n, 4, 4);
        ExprContext ctx{n, false, false};
        std::string text = format_poly(a);
        NCPoly<QRat> back;
        try {
            back = parse_poly<QRat>(text, ctx);
        } catch (const ParseError& e) {
            run.check(false, [&] { return "cannot reparse '" + text + "': " + e.what(); });
            continue;
        }
        run.check(back == a, [&] { return "round trip of '" + text + "'"; });
        run.check(format_poly(back) == text, [&] { return "format idempotence of '" + text + "'"; });
    }
    return run.finish(start);
}

inline SuiteResult suite_relations(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("relations");
    for (int n = 1; n <= cfg.max_n; ++n) {
        RuleSet<QRat> rules(n, cfg.qmode);
        Normalizer<QRat> norm(rules);
        for (const auto& rel : defining_relations<QRat>(n, cfg.qmode)) {
            run.check(norm.reduce(rel.lhs_minus_rhs).is_zero(), [&] { return rel.id.str() + " at n = " + std::to_string(n); });
            run.check(norm.reduce(involution(rel.lhs_minus_rhs)).is_zero(),
                      [&] { return "star of " + rel.id.str() + " at n = " + std::to_string(n); });
        }
        for (const auto& r : rules.base_rules()) {
            NCPoly<QRat> diff = NCPoly<QRat>(n, r.lhs) - r.rhs;
            run.check(norm.reduce(involution(diff)).is_zero(), [&] { return "star of rule " + r.name(); });
        }
    }
    return run.finish(start);
}

inline SuiteResult skipped(std::string name, std::string reason) {
    SuiteResult r;
    r.name = std::move(name);
    r.verdict = SuiteVerdict::Skipped;
    r.reason = std::move(reason);
    return r;
}

inline SuiteResult suite_confluence(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    if (cfg.qmode.is_zero()) return skipped("confluence", "q = 0: gap rule disabled, confluence not claimed");
    detail::SuiteRun run("confluence");
    for (int n = 1; n <= cfg.max_n; ++n) {
        RuleSet<QRat> rules(n, cfg.qmode);
        for (const auto& rep : check_local_confluence(rules, cfg.schema_bound))
            run.check(rep.joined, [&] { return "pair " + rep.first_rule + " / " + rep.second_rule + " on " + rep.overlap.str(); });
    }
    return run.finish(start);
}

inline SuiteResult suite_canonicity(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    if (cfg.qmode.is_zero()) return skipped("canonicity", "q = 0: gap rule disabled, normal forms not unique");
    detail::SuiteRun run("canonicity");
    detail::Sampler s(cfg.seed, cfg.qmode);
    for (int n = 1; n <= cfg.max_n; ++n) {
        RuleSet<QRat> rules(n, cfg.qmode);
        Normalizer<QRat> norm(rules);
        for (std::size_t t = 0; t < cfg.samples / 4; ++t) {
            auto a = s.ncpoly(n, 2, 5), b = s.ncpoly(n, 2, 5);
            NCPoly<QRat> na = norm.reduce(a), nb = norm.reduce(b);
            run.check(norm.reduce(a * b) == norm.reduce(na * nb), [&] { return "product of " + format_poly(a) + " and " + format_poly(b); });
            run.check(norm.reduce(involution(a * b)) == norm.reduce(involution(b) * involution(a)),
                      [&] { return "star of " + format_poly(a * b); });
        }
    }
    return run.finish(start);
}

inline SuiteResult suite_basis(const SuiteConfig& cfg) {
    if (cfg.qmode.is_zero()) return skipped("basis", "q = 0 unsupported for basis");
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("basis");
    detail::Sampler s(cfg.seed, cfg.qmode);
    const QMode& qm = cfg.qmode;
    RuleSet<QRat> rules(1, qm);
    Normalizer<QRat> norm(rules);
    auto e = [&qm](long j, unsigned long k, unsigned long l) { return basis_element<QRat>(qm, j, k, l); };

    // words vs letter-by-letter basis products
    for (std::size_t t = 0; t < cfg.samples; ++t) {
        NCPoly<QRat> w(1, s.word(1, 6));
        run.check(word_to_basis(w, norm) == evaluate_in_basis(w, qm), [&] { return "word " + format_poly(w); });
    }
    // closed formula for alpha^j alpha*^k
    for (unsigned j = 0; j <= 5; ++j)
        for (unsigned k = 0; k <= 5; ++k) {
            NCPoly<QRat> p = power(NCPoly<QRat>::gen(1, 0), j) * power(NCPoly<QRat>::gen(1, 0, true), k);
            run.check(alpha_power_product<QRat>(j, k, qm) == word_to_basis(p, norm),
                      [&] { return "alpha^" + std::to_string(j) + " alpha*^" + std::to_string(k); });
        }
    // filtration is multiplicative and star-stable
    for (long j = -3; j <= 3; ++j)
        for (unsigned long d = 0; d <= 3; ++d)
            for (unsigned long k = 0; k <= d; ++k) {
                BasisTerm x{j, k, d - k};
                for (long j2 = -3; j2 <= 3; ++j2)
                    for (unsigned long d2 = 0; d2 <= 3; ++d2)
                        for (unsigned long k2 = 0; k2 <= d2; ++k2) {
                            BasisTerm y{j2, k2, d2 - k2};
                            auto prod = basis_product(BasisVector<QRat>(qm, x), BasisVector<QRat>(qm, y));
                            run.check(filtration_degree(prod).at_least(d + d2), [&] { return x.str() + " * " + y.str(); });
                        }
                auto st = basis_star(BasisVector<QRat>(qm, x));
                run.check(st == e(-j, d - k, k), [&] { return "star of " + x.str(); });
                run.check(filtration_degree(st) == FiltrationDegree(d), [&] { return "degree of star of " + x.str(); });
                run.check(word_to_basis(NCPoly<QRat>(1, basis_word(j, k, d - k)), norm) == BasisVector<QRat>(qm, x),
                          [&] { return "round trip of " + x.str(); });
            }
    for (std::size_t t = 0; t < cfg.samples / 4; ++t) {
        BasisVector<QRat> x(qm), y(qm);
        for (int i = 0; i < 3; ++i) {
            x.add_term(s.basis_term(2, 0, 2), s.coeff());
            y.add_term(s.basis_term(2, 0, 2), s.coeff());
        }
        run.check(basis_star(x * y) == basis_star(y) * basis_star(x), [&] { return "star antihomomorphism at " + x.str(); });
        run.check(basis_star(basis_star(x)) == x, [&] { return "star involutive at " + x.str(); });
    }
    // alpha alpha*^j = alpha*^j alpha = alpha*^{j-1} and alpha^j alpha* = alpha* alpha^j = alpha^{j-1} mod V_2
    auto a = e(1, 0, 0), as = e(-1, 0, 0);
    for (long j = 1; j <= 5; ++j) {
        auto apow = e(j, 0, 0), aspow = e(-j, 0, 0);
        for (const auto& diff : {a * aspow - e(-(j - 1), 0, 0), aspow * a - e(-(j - 1), 0, 0), apow * as - e(j - 1, 0, 0),
                                 as * apow - e(j - 1, 0, 0)})
            run.check(filtration_degree(diff).at_least(2), [&] { return "mod V_2 identity at j = " + std::to_string(j); });
    }
    return run.finish(start);
}

inline SuiteResult suite_quotients(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("quotients");
    detail::Sampler s(cfg.seed, cfg.qmode);
    for (int n = 1; n <= cfg.max_n; ++n) {
        RuleSet<QRat> rules(n, cfg.qmode);
        Normalizer<QRat> norm(rules);
        auto g = [n](int i, bool st = false) { return NCPoly<QRat>::gen(n, i, st); };
        std::vector<NCPoly<QRat>> targets;
        // At q = 0 the generator certificates are still valid, but checking
        // z_i z_i* z_i = z_i needs the gap rule, which is off there.
        for (int i = 1; i <= n; ++i) {
            if (!cfg.qmode.is_zero()) {
                targets.push_back(g(i));
                targets.push_back(g(i, true));
            }
            targets.push_back(g(i) * g(i, true));
            NCPoly<QRat> x(n);
            for (int j = i; j <= n; ++j) x += g(j) * g(j, true);
            targets.push_back(x);
        }
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (i != j) targets.push_back(g(j) * g(i, true));
        for (const auto& t : targets) {
            auto cert = commutator_ideal_certificate(n, t, cfg.qmode);
            run.check(verify_certificate(cert, norm), [&] { return "certificate of " + format_poly(t); });
        }
        for (int i = 1; i <= n; ++i)
            run.check(project_to_circle(g(i), norm).is_zero(), [&] { return "circle image of z" + std::to_string(i); });
        for (std::size_t t = 0; t < cfg.samples / 2; ++t) {
            auto a = s.ncpoly(n, 3, 4), b = s.ncpoly(n, 3, 4);
            auto pa = project_to_circle(a, norm), pb = project_to_circle(b, norm);
            run.check(project_to_circle(a * b, norm) == pa * pb, [&] { return "multiplicativity at " + format_poly(a); });
            run.check(project_to_circle(involution(a), norm) == laurent_star(pa), [&] { return "star at " + format_poly(a); });
        }
    }
    // the quotient map z0 -> alpha, z1 -> beta, z_i -> 0 is compatible with the circle projections
    if (!cfg.qmode.is_zero() && cfg.max_n >= 2) {
        HomSpec<QRat> spec{2, cfg.qmode, TargetKind::SUq2, 1, cfg.qmode,
                           {NCPoly<QRat>::gen(1, 0), NCPoly<QRat>::gen(1, 1), NCPoly<QRat>(1)}};
        run.check(check_homomorphism(spec).ok(), [] { return "quotient map is a homomorphism"; });
        RuleSet<QRat> src(2, cfg.qmode), dst(1, cfg.qmode);
        Normalizer<QRat> ns(src), nd(dst);
        for (std::size_t t = 0; t < cfg.samples / 4; ++t) {
            auto a = s.ncpoly(2, 3, 4);
            run.check(project_to_circle(substitute(a, spec), nd) == project_to_circle(a, ns),
                      [&] { return "functoriality at " + format_poly(a); });
        }
    }
    return run.finish(start);
}

inline SuiteResult suite_ideal_filtration(const SuiteConfig& cfg) {
    if (cfg.qmode.is_zero()) return skipped("ideal-filtration", "q = 0 unsupported for basis");
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("ideal-filtration");
    const QMode& qm = cfg.qmode;
    RuleSet<QRat> rules(1, qm);
    Normalizer<QRat> norm(rules);
    // I_1 in V_1: the certified generators have positive degree
    for (bool st : {false, true}) {
        auto z1 = NCPoly<QRat>::gen(1, 1, st);
        run.check(verify_certificate(commutator_ideal_certificate(1, z1, qm), norm), [&] { return "certificate of " + format_poly(z1); });
        run.check(filtration_degree(word_to_basis(z1, norm)).at_least(1), [&] { return "degree of " + format_poly(z1); });
    }
    // V_1 in I_1: every positive-degree basis term is a multiple of beta or beta*
    for (long j = -3; j <= 3; ++j)
        for (unsigned long k = 0; k <= 3; ++k)
            for (unsigned long l = 0; l <= 3; ++l) {
                if (k + l == 0) continue;
                BasisTerm t{j, k, l};
                auto f = factor_through_beta<QRat>(t, qm);
                auto g = basis_element<QRat>(qm, 0, f.starred ? 0 : 1, f.starred ? 1 : 0);
                run.check((BasisVector<QRat>(qm, f.rest) * g).scaled(f.coeff) == BasisVector<QRat>(qm, t),
                          [&] { return "factorization of " + t.str(); });
            }
    return run.finish(start);
}

inline SuiteResult suite_unitary(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("unitary");
    detail::Sampler s(cfg.seed, cfg.qmode);
    const std::vector<Gaussian> units{Gaussian(Rational(1), Rational(0)), Gaussian(Rational(-1), Rational(0)),
                                      Gaussian(Rational(0), Rational(1)), Gaussian(Rational(3, 5), Rational(4, 5)),
                                      Gaussian(Rational(-5, 13), Rational(12, 13))};
    for (std::size_t t = 0; t < cfg.samples * 2; ++t) {
        LaurentPoly<Gaussian> a;
        auto terms = s.integer(1, 5);
        for (long i = 0; i < terms; ++i) {
            Gaussian c = s.coin() ? units[static_cast<std::size_t>(s.integer(0, 4))]
                                  : Gaussian(Rational(s.integer(-3, 3), s.integer(1, 3)), Rational(s.integer(-2, 2), s.integer(1, 3)));
            a.add_term(s.integer(-6, 6), c);
        }
        // brute force: expand a a* coefficient by coefficient
        std::map<long, Gaussian> brute;
        for (const auto& [i, ci] : a.terms())
            for (const auto& [j, cj] : a.terms()) brute[i - j] += ci * conj(cj);
        bool brute_unitary = brute[0] == Gaussian(Rational(1), Rational(0));
        for (const auto& [k, c] : brute) brute_unitary &= k == 0 || c.is_zero();
        auto v = is_unitary_laurent(a);
        bool single_unit = a.size() == 1 && is_unit_scalar(a.terms().begin()->second);
        run.check(std::holds_alternative<Unitary<Gaussian>>(v) == brute_unitary, [&] { return "verdict at " + a.str(); });
        run.check(brute_unitary == single_unit, [&] { return "single-term criterion at " + a.str(); });
        if (const auto* u = std::get_if<Unitary<Gaussian>>(&v))
            run.check(a == LaurentPoly<Gaussian>(u->lambda, u->j), [&] { return "unitary data at " + a.str(); });
    }
    return run.finish(start);
}

inline SuiteResult suite_descent(const SuiteConfig& cfg) {
    auto start = std::chrono::steady_clock::now();
    detail::SuiteRun run("descent");
    detail::Sampler s(cfg.seed, cfg.qmode);
    const std::vector<std::pair<Rational, Rational>> pairs{
        {Rational(1, 3), Rational(1, 2)}, {Rational(0), Rational(1, 2)}, {Rational(2, 3), Rational(1, 3)}};
    for (const auto& [q, qp] : pairs) {
        QMode qm = QMode::fixed(qp);
        QRat qc(q);
        run.check(!is_power(q, qp).is_some(), [&] { return "is_power(" + q.str() + ", " + qp.str() + ")"; });
        for (long m = 1; m <= 8; ++m)
            for (auto which : {DescentCase::A, DescentCase::B})
                for (long j : {-1L, 0L, 1L})
                    run.check(!descent_factor<QRat>(j, static_cast<unsigned long>(m), qc, qm, which).is_zero(),
                              [&] { return "nonzero factor at m = " + std::to_string(m); });
        for (std::size_t t = 0; t < cfg.samples / 8; ++t) {
            BasisVector<QRat> y(qm);
            for (auto i = s.integer(1, 4); i > 0; --i) y.add_term(s.basis_term(3, 1, 4), s.coeff());
            for (auto which : {DescentCase::A, DescentCase::B}) {
                // the factors reproduce T(y) mod V_{m+2} at the first level
                unsigned long m = filtration_degree(y).value();
                auto direct = descent_operator(y, qc, which).truncated_below(m + 2);
                run.check(direct == predicted_descent_image(y, m, qc, which), [&] { return "factors at " + y.str(); });
                auto out = run_descent(y, q, which, 4);
                run.check(std::holds_alternative<ZeroCertificate<QRat>>(out), [&] { return "descent of " + y.str(); });
                // soundness: a nonzero restriction of the support is forced to vanish too
                BasisVector<QRat> part(qm);
                for (const auto& [term, c] : y.terms())
                    if (s.coin()) part.add_term(term, c);
                if (!part.is_zero())
                    run.check(std::holds_alternative<ZeroCertificate<QRat>>(run_descent(part, q, which, 4)),
                              [&] { return "restriction of " + y.str(); });
            }
        }
    }
    // q = q': case A has a zero factor at m = 1 for j >= 0
    QMode half = QMode::fixed(Rational(1, 2));
    for (long j = 0; j <= 3; ++j)
        for (unsigned long k = 0; k <= 1; ++k) {
            auto rep = descent_step(basis_element<QRat>(half, j, k, 1 - k), 1, Rational(1, 2), DescentCase::A);
            run.check(!rep.forced_zero, [&] { return "no false obstruction at j = " + std::to_string(j); });
        }
    return run.finish(start);
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&);

inline const std::vector<std::pair<std::string, SuiteFn>>& suite_registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> reg{
        {"coeffq", suite_coeffq},       {"ncpoly", suite_ncpoly},       {"parser", suite_parser},
        {"relations", suite_relations}, {"confluence", suite_confluence}, {"canonicity", suite_canonicity},
        {"basis", suite_basis},         {"quotients", suite_quotients}, {"ideal-filtration", suite_ideal_filtration},
        {"unitary", suite_unitary},     {"descent", suite_descent},
    };
    return reg;
}

/// Runs one suite by name, or all of them for "all". Throws InvalidRange for an unknown name.
inline std::vector<SuiteResult> run_suites(const std::string& which, const SuiteConfig& cfg) {
    std::vector<SuiteResult> out;
    for (const auto& [name, fn] : suite_registry())
        if (which == "all" || which == name) out.push_back(fn(cfg));
    if (out.empty()) throw InvalidRange("unknown suite '" + which + "'");
    return out;
}

}  // namespace qsphere
