#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qsphere;

namespace {

using BV = BasisVector<QRat>;
const QMode sym = QMode::symbolic();

BV e(long j, unsigned long k, unsigned long l, const QRat& c = QRat(1)) { return basis_element<QRat>(sym, j, k, l, c); }
BV from_text(const std::string& s) { return word_to_basis(parse_poly<QRat>(s, ExprContext{1}), sym); }
QRat qp(long k) { return QRat::q_power(k); }

}  // namespace

TEST(Basis, WordExamples) {
    EXPECT_EQ(from_text("z1 z0"), e(1, 1, 0, QRat::q()));
    EXPECT_EQ(from_text("z0'^2"), e(-2, 0, 0));
    EXPECT_EQ(from_text("z0 z1 z1' z0'"), e(0, 1, 1, qp(-2)) - e(0, 2, 2, qp(-2)));
}

TEST(Basis, RejectsQZeroAndOtherArities) {
    EXPECT_THROW(BV(QMode::parse("0")), QZeroUnsupported);
    EXPECT_THROW(word_to_basis(parse_poly<QRat>("z2", ExprContext{2}), sym), ArityMismatch);
}

TEST(Basis, ProductExamples) {
    EXPECT_EQ(e(0, 1, 0) * e(1, 0, 0), e(1, 1, 0, QRat::q()));
    EXPECT_EQ(e(1, 0, 0) * e(-1, 0, 0), e(0, 0, 0) - e(0, 1, 1));
    EXPECT_EQ(e(2, 1, 0) * e(-1, 0, 1), e(1, 1, 1, qp(-2)) - e(1, 2, 2, qp(-2)));
}

TEST(Basis, ProductsAgreeWithRelationOracle) {
    for (long j = -3; j <= 3; ++j)
        for (unsigned long k = 0; k <= 2; ++k)
            for (unsigned long l = 0; l <= 2; ++l)
                for (long j2 = -3; j2 <= 3; ++j2)
                    for (unsigned long k2 = 0; k2 <= 2; ++k2)
                        for (unsigned long l2 = 0; l2 <= 2; ++l2) {
                            Word w = basis_word(j, k, l) * basis_word(j2, k2, l2);
                            EXPECT_TRUE(oracle::SuqElement::of_word(w).equals(e(j, k, l) * e(j2, k2, l2))) << w.str();
                        }
}

TEST(Basis, WordToBasisAgreesWithRelationOracle) {
    oracle::Random r(41);
    RuleSet<QRat> rules(1, sym);
    Normalizer<QRat> norm(rules);
    for (int t = 0; t < 300; ++t) {
        Word w = r.word(1, 6);
        NCPoly<QRat> a(1, w);
        BV x = word_to_basis(a, norm);
        EXPECT_TRUE(oracle::SuqElement::of_word(w).equals(x)) << w.str();
        EXPECT_EQ(evaluate_in_basis(a, sym), x) << w.str();
    }
}

TEST(Basis, AlphaPowerProduct) {
    EXPECT_EQ(alpha_power_product<QRat>(2, 1), e(1, 0, 0) - e(1, 1, 1));
    EXPECT_EQ(alpha_power_product<QRat>(1, 2), e(-1, 0, 0) - e(-1, 1, 1));
    EXPECT_EQ(alpha_power_product<QRat>(2, 2), e(0, 0, 0) - e(0, 1, 1, 1 + qp(-2)) + e(0, 2, 2, qp(-2)));
    for (unsigned long j = 0; j <= 5; ++j)
        for (unsigned long k = 0; k <= 5; ++k) {
            Word w;
            for (unsigned long s = 0; s < j; ++s) w.push_back(z(0));
            for (unsigned long s = 0; s < k; ++s) w.push_back(zs(0));
            EXPECT_TRUE(oracle::SuqElement::of_word(w).equals(alpha_power_product<QRat>(j, k))) << j << "," << k;
        }
}

TEST(Basis, StarTable) {
    EXPECT_EQ(basis_star(e(2, 1, 0)), e(-2, 0, 1));
    EXPECT_EQ(basis_star(e(0, 0, 0)), e(0, 0, 0));
    EXPECT_EQ(basis_star(e(-1, 2, 1)), e(1, 1, 2));
    RuleSet<QRat> rules(1, sym);
    Normalizer<QRat> norm(rules);
    for (long j = -3; j <= 3; ++j)
        for (unsigned long k = 0; k <= 3; ++k)
            for (unsigned long l = 0; l <= 3; ++l) {
                NCPoly<QRat> w(1, basis_word(j, k, l));
                EXPECT_EQ(word_to_basis(involution(w), norm), e(-j, l, k));
            }
}

TEST(Basis, StarIsAnAntihomomorphism) {
    oracle::Random r(43);
    auto random_vector = [&r] {
        BV x(sym);
        for (auto t = r.integer(1, 3); t > 0; --t)
            x.add_term({r.integer(-2, 2), static_cast<unsigned long>(r.integer(0, 2)), static_cast<unsigned long>(r.integer(0, 2))},
                       QRat(r.rational()) * qp(r.integer(-1, 1)));
        return x;
    };
    for (int t = 0; t < 80; ++t) {
        BV x = random_vector(), y = random_vector();
        EXPECT_EQ(basis_star(x * y), basis_star(y) * basis_star(x));
        EXPECT_EQ(basis_star(basis_star(x)), x);
        EXPECT_EQ(filtration_degree(basis_star(x)), filtration_degree(x));
    }
}

TEST(Filtration, Degrees) {
    EXPECT_EQ(filtration_degree(from_text("z0 z0'")).value(), 0u);
    EXPECT_EQ(filtration_degree(from_text("1 - z0 z0'")).value(), 2u);
    EXPECT_TRUE(filtration_degree(BV(sym)).is_infinite());
    EXPECT_TRUE(filtration_degree(BV(sym)).at_least(1000));
}

TEST(Filtration, Multiplicative) {
    for (long j = -3; j <= 3; ++j)
        for (unsigned long K = 0; K <= 3; ++K)
            for (unsigned long k = 0; k <= K; ++k)
                for (long j2 = -3; j2 <= 3; ++j2)
                    for (unsigned long K2 = 0; K2 <= 3; ++K2)
                        for (unsigned long k2 = 0; k2 <= K2; ++k2)
                            EXPECT_TRUE(filtration_degree(e(j, k, K - k) * e(j2, k2, K2 - k2)).at_least(K + K2));
}

TEST(Filtration, ModuloV2Identities) {
    for (unsigned long j = 1; j <= 5; ++j) {
        BV a = e(1, 0, 0), as = e(-1, 0, 0);
        BV neg = e(-static_cast<long>(j), 0, 0), pos = e(static_cast<long>(j), 0, 0);
        EXPECT_TRUE(filtration_degree(a * neg - e(1 - static_cast<long>(j), 0, 0)).at_least(2));
        EXPECT_TRUE(filtration_degree(neg * a - e(1 - static_cast<long>(j), 0, 0)).at_least(2));
        EXPECT_TRUE(filtration_degree(pos * as - e(static_cast<long>(j) - 1, 0, 0)).at_least(2));
        EXPECT_TRUE(filtration_degree(as * pos - e(static_cast<long>(j) - 1, 0, 0)).at_least(2));
    }
}

TEST(Basis, RoundTrip) {
    for (long j = -4; j <= 4; ++j)
        for (unsigned long k = 0; k <= 3; ++k)
            for (unsigned long l = 0; l <= 3; ++l) {
                EXPECT_EQ(word_to_basis(NCPoly<QRat>(1, basis_word(j, k, l)), sym), e(j, k, l));
                EXPECT_EQ(basis_term_of(basis_word(j, k, l)), (BasisTerm{j, k, l}));
            }
}

TEST(Basis, FactorThroughBeta) {
    for (long j = -3; j <= 3; ++j)
        for (unsigned long k = 0; k <= 3; ++k)
            for (unsigned long l = 0; l <= 3; ++l) {
                if (k + l == 0) {
                    EXPECT_THROW(factor_through_beta<QRat>({j, k, l}, sym), InvalidRange);
                    continue;
                }
                auto f = factor_through_beta<QRat>({j, k, l}, sym);
                BV g = f.starred ? e(0, 0, 1) : e(0, 1, 0);
                EXPECT_EQ((e(f.rest.j, f.rest.k, f.rest.l) * g).scaled(f.coeff), e(j, k, l));
            }
}

TEST(Basis, FixedQ) {
    QMode half = QMode::parse("1/2");
    BV a = basis_element<QRat>(half, 0, 1, 0) * basis_element<QRat>(half, 1, 0, 0);
    EXPECT_EQ(a, basis_element<QRat>(half, 1, 1, 0, QRat(Rational(1, 2))));
    EXPECT_THROW(a + e(0, 0, 0), Error);
}
