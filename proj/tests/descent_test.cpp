#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qsphere;

namespace {

using BV = BasisVector<QRat>;
const Rational third(1, 3), half(1, 2);
const QMode qhalf = QMode::fixed(half);

BV e(const QMode& qm, long j, unsigned long k, unsigned long l, const QRat& c = QRat(1)) {
    return basis_element<QRat>(qm, j, k, l, c);
}

/// y g - q g y through the symbolic relation oracle, then q -> q'.
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

HomSpec<QRat> spec(int n, const std::string& q, const std::string& qprime, std::vector<std::string> images) {
    HomSpec<QRat> s;
    s.source_n = n;
    s.source_q = QMode::parse(q);
    s.target = TargetKind::SUq2;
    s.target_q = QMode::parse(qprime);
    for (const auto& t : images) s.images.push_back(parse_poly<QRat>(t, ExprContext{1, false, true}));
    return s;
}

}  // namespace

TEST(IsPower, Examples) {
    EXPECT_EQ(is_power(Rational(1, 4), half).m, 2);
    EXPECT_FALSE(is_power(third, half).is_some());
    EXPECT_FALSE(is_power(Rational(0), half).is_some());
    EXPECT_EQ(is_power(half, half).m, 1);
    EXPECT_EQ(is_power(Rational(8, 27), Rational(2, 3)).m, 3);
    EXPECT_THROW(is_power(half, Rational(0)), InvalidRange);
    EXPECT_THROW(is_power(Rational(3, 2), half), InvalidRange);
}

TEST(Decompose, Examples) {
    auto a = lemma10_decompose(e(qhalf, 1, 0, 0) + e(qhalf, 0, 1, 1));
    ASSERT_TRUE(std::holds_alternative<Lemma10Form<QRat>>(a));
    const auto& fa = std::get<Lemma10Form<QRat>>(a);
    EXPECT_EQ(fa.which, DescentCase::A);
    EXPECT_EQ(fa.lambda, QRat(1));
    EXPECT_EQ(fa.x, e(qhalf, 0, 1, 1));

    auto b = lemma10_decompose(e(qhalf, -1, 0, 0, QRat(-1)));
    ASSERT_TRUE(std::holds_alternative<Lemma10Form<QRat>>(b));
    EXPECT_EQ(std::get<Lemma10Form<QRat>>(b).which, DescentCase::B);
    EXPECT_EQ(std::get<Lemma10Form<QRat>>(b).lambda, QRat(-1));
    EXPECT_TRUE(std::get<Lemma10Form<QRat>>(b).x.is_zero());

    auto c = lemma10_decompose(e(qhalf, 1, 0, 0) + e(qhalf, -1, 0, 0));
    ASSERT_TRUE(std::holds_alternative<NotOfForm<QRat>>(c));
    EXPECT_EQ(std::get<NotOfForm<QRat>>(c).circle_part, LaurentPoly<QRat>::u(1) + LaurentPoly<QRat>::u(-1));

    EXPECT_TRUE(std::holds_alternative<NotOfForm<QRat>>(lemma10_decompose(e(qhalf, 2, 0, 0))));
}

TEST(DescentStep, FactorExamples) {
    auto r1 = descent_step(e(qhalf, 0, 1, 0), 1, third, DescentCase::A);
    ASSERT_EQ(r1.conditions.size(), 1u);
    EXPECT_EQ(r1.conditions[0].factor, QRat(Rational(1, 6)));
    EXPECT_TRUE(r1.forced_zero);
    EXPECT_TRUE(r1.updated.is_zero());

    auto r2 = descent_step(e(qhalf, -1, 1, 0), 1, third, DescentCase::A);
    EXPECT_EQ(r2.conditions[0].factor, QRat(Rational(1, 3)));

    auto r3 = descent_step(e(qhalf, 1, 1, 0), 1, third, DescentCase::B);
    EXPECT_EQ(r3.conditions[0].factor, QRat(Rational(5, 3)));

    auto r4 = descent_step(e(qhalf, 0, 1, 0), 1, half, DescentCase::A);
    EXPECT_TRUE(r4.conditions[0].factor.is_zero());
    EXPECT_FALSE(r4.forced_zero);
}

TEST(DescentStep, Preconditions) {
    EXPECT_THROW(descent_step(e(qhalf, 1, 0, 0), 1, third, DescentCase::A), FiltrationViolation);
    EXPECT_THROW(descent_step(e(qhalf, 0, 1, 0), 1, Rational(1), DescentCase::A), InvalidQ);
    EXPECT_THROW(run_descent(e(qhalf, 0, 1, 0), third, DescentCase::A, 0), InvalidRange);
}

TEST(DescentOperator, AgreesWithRelationOracle) {
    oracle::Random r(61);
    const std::vector<std::pair<Rational, Rational>> pairs{{third, half}, {Rational(0), half}, {Rational(2, 3), third}};
    for (const auto& [q, qp] : pairs) {
        QMode qm = QMode::fixed(qp);
        for (int t = 0; t < 25; ++t) {
            BV y(qm);
            for (auto i = r.integer(1, 4); i > 0; --i) {
                auto K = static_cast<unsigned long>(r.integer(1, 4));
                auto k = static_cast<unsigned long>(r.integer(0, static_cast<long>(K)));
                y.add_term({r.integer(-3, 3), k, K - k}, QRat(r.rational()));
            }
            if (y.is_zero()) continue;
            for (auto which : {DescentCase::A, DescentCase::B}) {
                BV direct = descent_operator(y, QRat(q), which);
                EXPECT_EQ(direct, oracle_descent(y, q, which)) << y.str();
                unsigned long m = filtration_degree(y).value();
                EXPECT_EQ(direct.truncated_below(m + 2), predicted_descent_image(y, m, QRat(q), which)) << y.str();
                auto out = run_descent(y, q, which, 4);
                EXPECT_TRUE(std::holds_alternative<ZeroCertificate<QRat>>(out)) << y.str();
            }
        }
    }
}

TEST(RunDescent, Examples) {
    BV y = e(qhalf, 0, 1, 0) + e(qhalf, 2, 1, 1);
    auto out = run_descent(y, third, DescentCase::A, 4);
    ASSERT_TRUE(std::holds_alternative<ZeroCertificate<QRat>>(out));
    const auto& cert = std::get<ZeroCertificate<QRat>>(out);
    EXPECT_EQ(cert.depth, 4u);
    EXPECT_EQ(cert.steps.size(), 4u);
    EXPECT_TRUE(cert.residual.is_zero());

    auto stall = run_descent(e(qhalf, 0, 1, 0), half, DescentCase::A, 2);
    ASSERT_TRUE(std::holds_alternative<Stalled<QRat>>(stall));
    EXPECT_EQ(std::get<Stalled<QRat>>(stall).m, 1u);
    EXPECT_EQ(std::get<Stalled<QRat>>(stall).term, (BasisTerm{0, 1, 0}));

    auto vacuous = run_descent(BV(qhalf), third, DescentCase::B, 3);
    EXPECT_TRUE(std::holds_alternative<ZeroCertificate<QRat>>(vacuous));
}

TEST(RunDescent, NonvanishingFactors) {
    // all factors nonzero whenever q is not a power of q'
    for (long m = 1; m <= 8; ++m)
        for (long j = -3; j <= 3; ++j)
            for (auto which : {DescentCase::A, DescentCase::B}) {
                EXPECT_FALSE(descent_factor<QRat>(j, static_cast<unsigned long>(m), QRat(third), qhalf, which).is_zero());
                EXPECT_FALSE(descent_factor<QRat>(j, static_cast<unsigned long>(m), QRat(0), qhalf, which).is_zero());
            }
    EXPECT_TRUE(descent_factor<QRat>(0, 2, QRat(Rational(1, 4)), qhalf, DescentCase::A).is_zero());
}

TEST(RunDescent, RemainderCheck) {
    BV x = e(qhalf, 0, 1, 1);
    auto rep = descent_step(e(qhalf, 0, 1, 0), 1, third, DescentCase::A, std::optional<BV>(x));
    ASSERT_TRUE(rep.remainder_ok.has_value());
    EXPECT_TRUE(*rep.remainder_ok);
}

TEST(Obstruction, IdentityHasNoObstruction) {
    auto rep = verify_nonvanishing_obstruction(spec(1, "1/2", "1/2", {"z0", "z1"}), 4);
    EXPECT_EQ(rep.homomorphism, StageVerdict::Pass);
    EXPECT_EQ(rep.power.m, 1);
    EXPECT_EQ(rep.descent, StageVerdict::Skipped);
    EXPECT_EQ(rep.outcome, ObstructionOutcome::NoObstruction);
}

TEST(Obstruction, CrossParameterMapFailsTheRelations) {
    auto rep = verify_nonvanishing_obstruction(spec(1, "1/3", "1/2", {"z0", "z1"}), 4);
    EXPECT_EQ(rep.homomorphism, StageVerdict::Fail);
    EXPECT_EQ(rep.outcome, ObstructionOutcome::NotHomomorphism);
    const auto* v = find_violation(rep.hom, RelationId{3, 0, -1});
    ASSERT_NE(v, nullptr);
    EXPECT_EQ(v->residue, NCPoly<QRat>(1, Word{z(1), zs(1)}, QRat(Rational(-5, 36))));
    EXPECT_NE(rep.conclusion.find("stage (1)"), std::string::npos);
}

TEST(Obstruction, CandidatesAreForcedIntoHighFiltration) {
    for (int n = 1; n <= 2; ++n) {
        std::vector<std::string> images{"-e(-1,0,0) + e(0,1,1)"};
        for (int i = 1; i <= n; ++i) images.push_back("e(0,1,0) + 3 e(-2,2,1) - e(1,0,1)");
        auto rep = verify_nonvanishing_obstruction(spec(n, "1/3", "1/2", images), 4);
        EXPECT_EQ(rep.decomposition, StageVerdict::Pass);
        EXPECT_EQ(rep.descent, StageVerdict::Pass);
        EXPECT_TRUE(rep.descent_certified());
        ASSERT_EQ(rep.generators.size(), static_cast<std::size_t>(n));
        for (const auto& gd : rep.generators) {
            ASSERT_TRUE(gd.outcome.has_value());
            EXPECT_TRUE(std::holds_alternative<ZeroCertificate<QRat>>(*gd.outcome));
        }
    }
}

TEST(Obstruction, RequiresSuq2TargetWithFixedQ) {
    auto s = spec(1, "1/3", "q", {"z0", "z1"});
    EXPECT_THROW(verify_nonvanishing_obstruction(s, 4), Error);
}
