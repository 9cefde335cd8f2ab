#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace qsphere;

namespace {

using P = NCPoly<QRat>;
P parse(const std::string& s, int n = 1) { return parse_poly<QRat>(s, ExprContext{n}); }

}  // namespace

TEST(Parser, Polynomials) {
    P a = parse("z0' z0 - q^2 z1 z1'");
    P expected(1, Word{zs(0), z(0)});
    expected.add_term(Word{z(1), zs(1)}, -(QRat::q() * QRat::q()));
    EXPECT_EQ(a, expected);
    EXPECT_EQ(parse("(1-q^2)/(1+q) z0"), P(1, Word{z(0)}, 1 - QRat::q()));
    EXPECT_EQ(parse("z1^3"), P(1, Word{z(1), z(1), z(1)}));
    EXPECT_EQ(parse("2*z0*z1 - z0 z1"), parse("z0 z1"));
    EXPECT_EQ(parse("(z0 + z1)'"), parse("z0' + z1'"));
    EXPECT_EQ(parse("(z0 z1)'"), parse("z1' z0'"));
}

TEST(Parser, Errors) {
    EXPECT_THROW(parse("z2 z0"), UnknownGenerator);
    EXPECT_THROW(parse("z0 +"), SyntaxError);
    EXPECT_THROW(parse("z0 ) "), SyntaxError);
    EXPECT_THROW(parse("z0^-1"), NegativeWordPower);
    EXPECT_THROW(parse("1/z0"), ParseError);
    EXPECT_THROW(parse("i z0"), ParseError);
    EXPECT_THROW(parse("e(0,1,0)"), ParseError);
    try {
        parse("z0 $ z1");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 3u);
    }
}

TEST(Parser, GaussianAndBasisAtoms) {
    auto a = parse_poly<QRatI>("(3/5 + 4/5 i) z0", ExprContext{1, true});
    EXPECT_EQ(a.coefficient(Word{z(0)}), QRatI(Gaussian(Rational(3, 5), Rational(4, 5))));
    auto e = parse_poly<QRat>("e(-2,1,1)", ExprContext{1, false, true});
    EXPECT_EQ(e, P(1, Word{z(1), zs(1), zs(0), zs(0)}));
    auto u = parse_poly<QRat>("u^-2 + u", ExprContext{0, false, false, true});
    P expected(0, Word{zs(0), zs(0)});
    expected.add_term(Word{z(0)}, QRat(1));
    EXPECT_EQ(u, expected);
}

TEST(Parser, Formatting) {
    EXPECT_EQ(format_poly(parse("z0 z0' + (1-q^2) z1 z1'")), "z0 z0' + (1-q^2) z1 z1'");
    EXPECT_EQ(format_poly(P(1)), "0");
}

TEST(Parser, FormatRoundTripsOnRandomPolynomials) {
    oracle::Random r(3);
    for (int t = 0; t < 200; ++t) {
        P a = r.poly(2, 4, 4);
        P b = a.scaled(r.qrat());
        EXPECT_EQ(parse(format_poly(b), 2), b) << format_poly(b);
    }
}
