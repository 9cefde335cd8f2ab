// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "oracles.hpp"

using namespace qsphere;

namespace {

using P = NCPoly<QRat>;
using BV = BasisVector<QRat>;
const QMode sym = QMode::symbolic();

struct Outcome {
    std::size_t checks = 0;
    std::size_t failures = 0;
    std::string first;

    void check(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (!ok && failures++ == 0) first = what();
    }
};

P gen(int n, int i, bool st = false) { return P::gen(n, i, st); }
P parse(const std::string& s, int n) { return parse_poly<QRat>(s, ExprContext{n}); }
BV e(const QMode& qm, long j, unsigned long k, unsigned long l, const QRat& c = QRat(1)) { return basis_element<QRat>(qm, j, k, l, c); }

/// sum of coeff * left [x,y] right, expanded by hand
P expand(const IdealCertificate<QRat>& cert) {
    P sum(cert.arity);
    for (const auto& t : cert.terms)
        sum += (P(cert.arity, t.left) * (t.x * t.y - t.y * t.x) * P(cert.arity, t.right)).scaled(t.coeff);
    return sum;
}

HomSpec<QRat> suq2_spec(int n, const Rational& q, const Rational& qp, const std::vector<BV>& images) {
    HomSpec<QRat> s;
    s.source_n = n;
    s.source_q = QMode::fixed(q);
    s.target = TargetKind::SUq2;
    s.target_q = QMode::fixed(qp);
    for (const auto& y : images) s.images.push_back(basis_to_poly(y));
    return s;
}

// 1. every defining relation normalizes to zero
Outcome relation_soundness() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        RuleSet<QRat> rules(n, sym);
        Normalizer<QRat> norm(rules);
        for (const auto& text : oracle::relation_texts(n))
            o.check(norm.reduce(parse(text, n)).is_zero(), [&] { return "n = " + std::to_string(n) + ": " + text; });
    }
    return o;
}

// 2. critical pairs join; the termination measure is checked when the rule set is built
Outcome confluence_audit() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        try {
            RuleSet<QRat> rules(n, sym, 3);
            for (const auto& rep : check_local_confluence(rules, 3))
                o.check(rep.joined, [&] { return "unjoined overlap " + rep.overlap.str(); });
        } catch (const Error& err) {
            o.check(false, [&] { return std::string(err.what()); });
        }
    }
    return o;
}

// 3. word_to_basis(normalize(w)) = product of letters through basis_product
Outcome basis_cross_oracle() {
    Outcome o;
    oracle::Random r(301);
    RuleSet<QRat> rules(1, sym);
    Normalizer<QRat> norm(rules);
    for (int t = 0; t < 500; ++t) {
        Word w = r.word(1, 6);
        P a(1, w);
        BV via_rules = word_to_basis(a, norm);
        BV via_products = evaluate_in_basis(a, sym);
        o.check(via_rules == via_products, [&] { return "word " + w.str(); });
        o.check(oracle::SuqElement::of_word(w).equals(via_products), [&] { return "relation oracle at " + w.str(); });
    }
    return o;
}

// 4. alpha^j alpha*^k
Outcome alpha_powers() {
    Outcome o;
    RuleSet<QRat> rules(1, sym);
    Normalizer<QRat> norm(rules);
    for (unsigned long j = 0; j <= 5; ++j)
        for (unsigned long k = 0; k <= 5; ++k) {
            Word w;
            for (unsigned long s = 0; s < j; ++s) w.push_back(z(0));
            for (unsigned long s = 0; s < k; ++s) w.push_back(zs(0));
            BV got = alpha_power_product<QRat>(j, k);
            o.check(got == word_to_basis(P(1, w), norm), [&] { return "j = " + std::to_string(j) + ", k = " + std::to_string(k); });
            if (j < k) continue;
            // alpha^{j-k} prod_{p<k} (1 - q^{-2p} t) with t = beta beta*; alpha^a t^s = e(a,s,s)
            std::vector<QRat> poly{QRat(1)};
            for (unsigned long p = 0; p < k; ++p) {
                std::vector<QRat> next(poly.size() + 1, QRat(0));
                for (std::size_t s = 0; s < poly.size(); ++s) {
                    next[s] = next[s] + poly[s];
                    next[s + 1] = next[s + 1] - poly[s] * QRat::q_power(-2 * static_cast<long>(p));
                }
                poly = next;
            }
            BV closed(sym);
            for (std::size_t s = 0; s < poly.size(); ++s) closed.add_term({static_cast<long>(j - k), s, s}, poly[s]);
            o.check(got == closed, [&] { return "closed form at j = " + std::to_string(j) + ", k = " + std::to_string(k); });
        }
    return o;
}

// 5. filtration multiplicativity, star stability, star table
Outcome filtration_and_star() {
    Outcome o;
    std::vector<BasisTerm> terms;
    for (long j = -3; j <= 3; ++j)
        for (unsigned long K = 0; K <= 3; ++K)
            for (unsigned long k = 0; k <= K; ++k) terms.push_back({j, k, K - k});
    for (const auto& a : terms)
        for (const auto& b : terms)
            o.check(filtration_degree(e(sym, a.j, a.k, a.l) * e(sym, b.j, b.k, b.l)).at_least(a.degree() + b.degree()),
                    [&] { return a.str() + " * " + b.str(); });
    RuleSet<QRat> rules(1, sym);
    Normalizer<QRat> norm(rules);
    for (long j = -3; j <= 3; ++j)
        for (unsigned long k = 0; k <= 3; ++k)
            for (unsigned long l = 0; l <= 3; ++l) {
                BV x = e(sym, j, k, l, QRat::q() + 2);
                BV s = basis_star(x);
                o.check(filtration_degree(s) == filtration_degree(x), [&] { return "degree of star " + x.str(); });
                // (e_{j,k,l})* = e_{-j,l,k}, and agrees with the involution on words
                o.check(s == e(sym, -j, l, k, QRat::q() + 2), [&] { return "star table at " + x.str(); });
                o.check(word_to_basis(involution(P(1, basis_word(j, k, l))), norm) == e(sym, -j, l, k),
                        [&] { return "word star at " + x.str(); });
            }
    return o;
}

// 6. certificates re-evaluate; the circle projection is a *-homomorphism killing z_i
Outcome ideal_certificates() {
    Outcome o;
    for (int n = 1; n <= 3; ++n) {
        RuleSet<QRat> rules(n, sym);
        Normalizer<QRat> norm(rules);
        std::vector<P> targets;
        for (int i = 1; i <= n; ++i) {
            targets.push_back(gen(n, i));
            targets.push_back(gen(n, i) * gen(n, i, true));
            P x(n);
            for (int j = i; j <= n; ++j) x += gen(n, j) * gen(n, j, true);
            targets.push_back(x);
        }
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                if (i != j) targets.push_back(gen(n, j) * gen(n, i, true));
        for (const auto& t : targets) {
            auto cert = commutator_ideal_certificate(n, t);
            o.check(norm.reduce(expand(cert)) == norm.reduce(t), [&] { return "certificate of " + format_poly(t); });
        }
        for (int i = 1; i <= n; ++i)
            o.check(project_to_circle(gen(n, i), norm).is_zero(), [&] { return "circle image of z" + std::to_string(i); });
    }
    oracle::Random r(306);
    for (int t = 0; t < 500; ++t) {
        int n = 1 + t % 3;
        RuleSet<QRat> rules(n, sym);
        Normalizer<QRat> norm(rules);
        P a = r.poly(n, 3, 4), b = r.poly(n, 3, 4);
        auto pa = project_to_circle(a, norm), pb = project_to_circle(b, norm);
        o.check(project_to_circle(a * b, norm) == pa * pb, [&] { return "multiplicativity at " + format_poly(a); });
        o.check(project_to_circle(involution(a), norm) == laurent_star(pa), [&] { return "star at " + format_poly(a); });
    }
    return o;
}

// 7. V_1 = I_1 at the bounds
Outcome beta_factorization() {
    Outcome o;
    RuleSet<QRat> rules(1, sym);
    Normalizer<QRat> norm(rules);
    // beta, beta* lie in I_1
    for (bool st : {false, true}) {
        P b = gen(1, 1, st);
        auto cert = commutator_ideal_certificate(1, b);
        o.check(norm.reduce(expand(cert)) == norm.reduce(b), [&] { return "certificate of " + format_poly(b); });
        o.check(filtration_degree(word_to_basis(b, norm)).at_least(1), [&] { return "degree of " + format_poly(b); });
    }
    const BV beta = e(sym, 0, 1, 0), beta_star = e(sym, 0, 0, 1);
    for (long j = -3; j <= 3; ++j)
        for (unsigned long k = 0; k <= 3; ++k)
            for (unsigned long l = 0; l <= 3; ++l) {
                BV x = e(sym, j, k, l);
                // I_1 in V_1: multiples of beta, beta* on either side stay in V_1
                for (const BV* g : {&beta, &beta_star}) {
                    o.check(filtration_degree(x * *g).at_least(1), [&] { return "right multiple of " + x.str(); });
                    o.check(filtration_degree(*g * x).at_least(1), [&] { return "left multiple of " + x.str(); });
                }
                if (k + l == 0) continue;
                // V_1 in I_1: e = c * rest * g with g = beta or beta*
                auto f = factor_through_beta<QRat>({j, k, l}, sym);
                const BV& g = f.starred ? beta_star : beta;
                o.check((e(sym, f.rest.j, f.rest.k, f.rest.l) * g).scaled(f.coeff) == x, [&] { return "factorization of " + x.str(); });
            }
    return o;
}

// 8. unitary Laurent polynomials
Outcome unitary_laurent() {
    Outcome o;
    oracle::Random r(308);
    const std::vector<Gaussian> units{Gaussian(1), Gaussian(-1), Gaussian::i(), -Gaussian::i(),
                                      Gaussian(Rational(3, 5), Rational(4, 5)), Gaussian(Rational(-5, 13), Rational(12, 13)),
                                      Gaussian(Rational(8, 17), Rational(-15, 17))};
    for (int t = 0; t < 1000; ++t) {
        LaurentPoly<Gaussian> a;
        for (auto k = r.integer(1, 5); k > 0; --k) {
            Gaussian c = r.coin() ? units[static_cast<std::size_t>(r.integer(0, 6))] : Gaussian(r.rational(), r.rational());
            a.add_term(r.integer(-6, 6), c);
        }
        auto v = is_unitary_laurent(a);
        bool decided = std::holds_alternative<Unitary<Gaussian>>(v);
        bool single = a.size() == 1 && a.terms().begin()->second.norm() == Rational(1);
        o.check(decided == single, [&] { return "single-term criterion at " + a.str(); });
        o.check(decided == oracle::brute_unitary(a), [&] { return "brute force at " + a.str(); });
        if (const auto* u = std::get_if<Unitary<Gaussian>>(&v))
            o.check(LaurentPoly<Gaussian>(u->lambda, u->j) == a, [&] { return "unitary data at " + a.str(); });
    }
    return o;
}

/// y g - q g y from the relation oracle, with the target parameter substituted afterwards
BV oracle_descent(const BV& y, const Rational& q, DescentCase which) {
    const Rational qp = y.qmode().value();
    Letter g = which == DescentCase::A ? z(0) : zs(0);
    oracle::SuqElement acc;
    for (const auto& [t, c] : y.terms()) {
        Word w = basis_word(t.j, t.k, t.l);
        for (const auto& [k, v] : oracle::SuqElement::of_word(w * Word{g}).terms) acc.add(k, c * v.eval(qp));
        for (const auto& [k, v] : oracle::SuqElement::of_word(Word{g} * w).terms) acc.add(k, -(c * QRat(q) * v.eval(qp)));
    }
    BV out(y.qmode());
    for (const auto& [k, c] : acc.terms) out.add_term({std::get<0>(k), std::get<1>(k), std::get<2>(k)}, c);
    return out;
}

BV random_v1(oracle::Random& r, const QMode& qm, long max_j, unsigned long max_deg) {
    BV y(qm);
    while (y.is_zero())
        for (auto i = r.integer(1, 4); i > 0; --i) {
            auto K = static_cast<unsigned long>(r.integer(1, static_cast<long>(max_deg)));
            auto k = static_cast<unsigned long>(r.integer(0, static_cast<long>(K)));
            y.add_term({r.integer(-max_j, max_j), k, K - k}, QRat(r.rational()));
        }
    return y;
}

// 9. descent
Outcome descent() {
    Outcome o;
    oracle::Random r(309);
    const std::vector<std::pair<Rational, Rational>> pairs{
        {Rational(1, 3), Rational(1, 2)}, {Rational(0), Rational(1, 2)}, {Rational(2, 3), Rational(1, 3)}};
    for (const auto& [q, qp] : pairs) {
        QMode qm = QMode::fixed(qp);
        for (int t = 0; t < 40; ++t) {
            BV y = random_v1(r, qm, 3, 4);
            for (auto which : {DescentCase::A, DescentCase::B}) {
                BV direct = descent_operator(y, QRat(q), which);
                o.check(direct == oracle_descent(y, q, which), [&] { return "T(y) at " + y.str(); });
                unsigned long m = filtration_degree(y).value();
                o.check(direct.truncated_below(m + 2) == predicted_descent_image(y, m, QRat(q), which),
                        [&] { return "factors mod V_{m+2} at " + y.str(); });
                auto out = run_descent(y, q, which, 4);
                o.check(std::holds_alternative<ZeroCertificate<QRat>>(out), [&] { return "descent of " + y.str(); });
            }
        }
    }
    const QMode half = QMode::fixed(Rational(1, 2));
    auto stall = run_descent(e(half, 0, 1, 0), Rational(1, 2), DescentCase::A, 4);
    const auto* s = std::get_if<Stalled<QRat>>(&stall);
    o.check(s && s->m == 1 && s->term == BasisTerm{0, 1, 0}, [] { return "q = q' = 1/2 should stall at m = 1"; });
    return o;
}

// 10. the full pipeline
Outcome pipeline() {
    Outcome o;
    const unsigned long M = 4;
    const Rational half(1, 2), third(1, 3);
    const QMode qh = QMode::fixed(half);
    for (int n = 1; n <= 2; ++n) {
        // (a) q = q': the identity, or the quotient map for n = 2
        std::vector<BV> id{e(qh, 1, 0, 0), e(qh, 0, 1, 0)};
        if (n == 2) id.push_back(BV(qh));
        auto a = verify_nonvanishing_obstruction(suq2_spec(n, half, half, id), M);
        o.check(a.homomorphism == StageVerdict::Pass && a.outcome == ObstructionOutcome::NoObstruction,
                [&] { return "identity, n = " + std::to_string(n) + ": " + a.conclusion; });

        // (b) the same images across parameters
        auto b = verify_nonvanishing_obstruction(suq2_spec(n, third, half, id), M);
        o.check(b.homomorphism == StageVerdict::Fail, [&] { return "cross-parameter map, n = " + std::to_string(n); });
        if (n == 1) {
            const auto* v = find_violation(b.hom, RelationId{3, 0, -1});
            o.check(v && v->residue == P(1, Word{z(1), zs(1)}, QRat(Rational(-5, 36))), [] { return "residue -(5/36) beta beta*"; });
        }

        // (c) z_0 -> lambda alpha + x or lambda alpha* + x: the other images are forced into V_4
        oracle::Random r(310 + static_cast<std::uint64_t>(n));
        for (int t = 0; t < 20; ++t) {
            const bool case_b = t % 2 == 1;
            QRat lambda(r.coin() ? 1 : -1);
            BV x(qh);
            for (auto i = r.integer(0, 3); i > 0; --i) {
                auto K = static_cast<unsigned long>(r.integer(2, 4));
                auto k = static_cast<unsigned long>(r.integer(0, static_cast<long>(K)));
                x.add_term({r.integer(-3, 3), k, K - k}, QRat(r.rational()));
            }
            std::vector<BV> images{e(qh, case_b ? -1 : 1, 0, 0, lambda) + x};
            for (int i = 1; i <= n; ++i) images.push_back(random_v1(r, qh, 3, 4));
            auto c = verify_nonvanishing_obstruction(suq2_spec(n, third, half, images), M);
            o.check(c.decomposition == StageVerdict::Pass && c.descent == StageVerdict::Pass && c.descent_certified(),
                    [&] { return "candidate " + images[0].str() + ": " + c.conclusion; });
            for (const auto& g : c.generators) {
                const auto* cert = g.outcome ? std::get_if<ZeroCertificate<QRat>>(&*g.outcome) : nullptr;
                o.check(cert && filtration_degree(cert->residual).at_least(M),
                        [&] { return "image of z" + std::to_string(g.index) + " not forced into V_4"; });
            }
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
        double limit_seconds;
    };
    const std::vector<Criterion> criteria{
        {1, "relation soundness (n <= 3, symbolic q)", relation_soundness, 10},
        {2, "confluence audit (n <= 3, schema bound 3)", confluence_audit, 300},
        {3, "basis/rewriting cross-oracle (500 words)", basis_cross_oracle, 600},
        {4, "alpha^j alpha*^k closed form (j, k <= 5)", alpha_powers, 600},
        {5, "filtration multiplicativity and star table", filtration_and_star, 600},
        {6, "commutator-ideal certificates and circle projection", ideal_certificates, 600},
        {7, "V_1 = I_1 via factorization through beta, beta*", beta_factorization, 600},
        {8, "unitary Laurent polynomials (1000 samples)", unitary_laurent, 600},
        {9, "filtration descent", descent, 600},
        {10, "obstruction pipeline (M = 4, n <= 2)", pipeline, 600},
    };
    bool all = true;
    double total = 0;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& ex) {
            o.check(false, [&] { return std::string("exception: ") + ex.what(); });
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        total += secs;
        bool pass = o.failures == 0 && secs < c.limit_seconds;
        all = all && pass;
        std::ostringstream line;
        line << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.id << "  " << c.name << "  (" << o.checks
             << " checks, " << std::fixed << std::setprecision(2) << secs << " s)";
        if (o.failures > 0) line << "\n      " << o.failures << " failures; first: " << o.first;
        if (secs >= c.limit_seconds) line << "\n      over the time limit of " << c.limit_seconds << " s";
        std::cout << line.str() << std::endl;
    }
    bool in_time = total < 600;
    std::cout << (all && in_time ? "PASS" : "FAIL") << "  all criteria, total " << std::fixed << std::setprecision(2) << total << " s"
              << std::endl;
    return all && in_time ? 0 : 1;
}
