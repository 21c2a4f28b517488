#include "spinres/arith/ratfun.hpp"
#include "spinres/arith/serialize.hpp"
#include "spinres/errors.hpp"
#include "spinres/random.hpp"

#include <gtest/gtest.h>

using namespace spinres;

namespace {

const MultiPoly L = MultiPoly::variable(sym::lambda());
const MultiPoly N = MultiPoly::variable(sym::n());

MultiPoly random_poly(Rng& rng, unsigned max_deg, unsigned max_terms) {
    MultiPoly p;
    auto terms = rng.uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) {
        auto dl = static_cast<unsigned>(rng.uniform(0, max_deg));
        auto dn = static_cast<unsigned>(rng.uniform(0, max_deg - dl));
        GaussianRational c(rng.rational(5, 3), rng.coin() ? Rational(0) : rng.rational(2, 2));
        p += MultiPoly(c) * L.pow(dl) * N.pow(dn);
    }
    return p;
}

RationalFunction random_ratfun(Rng& rng) {
    MultiPoly den;
    while (den.is_zero()) den = random_poly(rng, 2, 2);
    return RationalFunction(random_poly(rng, 2, 3), den);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
    EXPECT_EQ(parse_rational(" -7/2 "), make_rational(-7, 2));
    EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
    EXPECT_EQ(to_string(make_rational(0, 5)), "0");
    EXPECT_THROW(parse_rational("1/0"), UsageError);
    EXPECT_THROW(parse_rational("x"), UsageError);
    EXPECT_THROW(parse_rational("1/-2"), UsageError);
}

TEST(GaussianRational, FieldBasics) {
    auto i = GaussianRational::i();
    EXPECT_EQ(i * i, GaussianRational(-1));
    GaussianRational z(make_rational(1, 2), make_rational(-3, 4));
    EXPECT_EQ(z * z.inverse(), GaussianRational(1));
    EXPECT_EQ(z.to_string(), "1/2-3/4i");
    EXPECT_THROW(GaussianRational(0).inverse(), DivisionByZero);
}

TEST(MultiPoly, PochhammerExamples) {
    EXPECT_EQ(pochhammer(L, 0), MultiPoly(1));
    EXPECT_EQ(pochhammer(MultiPoly(3), 2), MultiPoly(12));
    EXPECT_EQ(pochhammer(L, 3), L.pow(3) + MultiPoly(3) * L.pow(2) + MultiPoly(2) * L);
}

TEST(MultiPoly, PochhammerMatchesIntegerProductOracle) {
    for (unsigned l = 0; l <= 8; ++l) {
        MultiPoly p = pochhammer(L + N, l);
        EXPECT_EQ(p.total_degree(), l);
        for (long a = -4; a <= 4; ++a) {
            for (long b = -3; b <= 3; ++b) {
                long direct = 1;
                for (unsigned k = 0; k < l; ++k) direct *= a + b + static_cast<long>(k);
                EXPECT_EQ(p.evaluate({{sym::lambda(), a}, {sym::n(), b}}), GaussianRational(direct));
            }
        }
    }
}

TEST(MultiPoly, RingExamples) {
    EXPECT_EQ((L + 1) * (L - 1), L * L - 1);
    EXPECT_TRUE((2 * L + 1).substitute(sym::lambda(), GaussianRational(make_rational(-1, 2))).is_zero());
    EXPECT_EQ((2 * L + N - 3).substitute(sym::n(), GaussianRational(5)), 2 * L + 2);
}

TEST(MultiPoly, SymbolListIsTrimmed) {
    MultiPoly p = (L + N) - N;
    EXPECT_EQ(p, L);
    ASSERT_EQ(p.symbols().size(), 1u);
    EXPECT_TRUE(((L + 1) - L).is_constant());
}

TEST(MultiPoly, ArityMismatchIsUsageError) {
    EXPECT_THROW(MultiPoly::from_terms({sym::lambda()}, {{{1, 2}, GaussianRational(1)}}), UsageError);
    EXPECT_THROW(MultiPoly::from_terms({sym::n(), sym::lambda()}, {}), UsageError);
}

TEST(MultiPoly, GradedLexLeadingTerm) {
    MultiPoly p = L * N + N * N + L * L + L.pow(3) * 0 + 1;
    // Degree-2 terms: lambda^2 > lambda*n > n^2.
    auto it = p.terms().begin();
    EXPECT_EQ(it->first, (Exponents{2, 0}));
    ++it;
    EXPECT_EQ(it->first, (Exponents{1, 1}));
    ++it;
    EXPECT_EQ(it->first, (Exponents{0, 2}));
}

TEST(MultiPoly, RingAxiomsSeeded) {
    Rng rng(20240611);
    for (int k = 0; k < 1000; ++k) {
        MultiPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4), c = random_poly(rng, 3, 4);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a + b, b + a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_TRUE((a - a).is_zero());
    }
}

TEST(MultiPoly, SubstitutionIsRingHomomorphism) {
    Rng rng(7);
    for (int k = 0; k < 300; ++k) {
        MultiPoly a = random_poly(rng, 3, 4), b = random_poly(rng, 3, 4);
        GaussianRational x = rng.rational(7, 5), y = rng.rational(7, 5);
        std::map<Symbol, GaussianRational> at{{sym::lambda(), x}, {sym::n(), y}};
        ASSERT_EQ((a * b).evaluate(at), a.evaluate(at) * b.evaluate(at));
        ASSERT_EQ((a + b).evaluate(at), a.evaluate(at) + b.evaluate(at));
        MultiPoly v = random_poly(rng, 1, 2);
        ASSERT_EQ((a * b).substitute(sym::lambda(), v), a.substitute(sym::lambda(), v) * b.substitute(sym::lambda(), v));
    }
}

TEST(MultiPoly, ExactDivisionAndGcd) {
    MultiPoly f = (2 * L + N - 3) * (L - N + 1), g = (2 * L + N - 3) * (L + 5);
    auto q = exact_divide(f, L - N + 1);
    ASSERT_TRUE(q.has_value());
    EXPECT_EQ(*q, 2 * L + N - 3);
    EXPECT_FALSE(exact_divide(f, L + 7).has_value());
    MultiPoly h = gcd(f, g);
    EXPECT_EQ(h * 2, 2 * L + N - 3);  // monic: leading coefficient 1
    EXPECT_EQ(gcd(L, N), MultiPoly(1));
}

TEST(MultiPoly, GcdOfSeededProducts) {
    Rng rng(99);
    for (int k = 0; k < 200; ++k) {
        MultiPoly common = random_poly(rng, 2, 3);
        if (common.is_zero()) continue;
        MultiPoly a = common * random_poly(rng, 2, 3), b = common * random_poly(rng, 2, 3);
        if (a.is_zero() || b.is_zero()) continue;
        MultiPoly g = gcd(a, b);
        ASSERT_TRUE(exact_divide(a, g).has_value());
        ASSERT_TRUE(exact_divide(b, g).has_value());
        ASSERT_TRUE(exact_divide(g, common * common.leading_coefficient().inverse()).has_value());
    }
}

TEST(MultiPoly, RationalRoots) {
    MultiPoly p = (2 * L + 1) * (2 * L + 1) * (2 * L + 3) * L;
    auto roots = rational_roots(p, sym::lambda());
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_EQ(roots[0], std::make_pair(make_rational(-3, 2), 1u));
    EXPECT_EQ(roots[1], std::make_pair(make_rational(-1, 2), 2u));
    EXPECT_EQ(roots[2], std::make_pair(Rational(0), 1u));
    EXPECT_TRUE(rational_roots(L * L + 1, sym::lambda()).empty());
}

TEST(RationalFunction, Examples) {
    RationalFunction r(MultiPoly(1), 2 * L + 1);
    EXPECT_EQ(r + r, RationalFunction(MultiPoly(2), 2 * L + 1));
    RationalFunction s(2 * L + 1, 2 * L + 3);
    EXPECT_EQ(s * RationalFunction(2 * L + 3), RationalFunction(2 * L + 1));
    RationalFunction t(4 * L * L - 1, 2 * L + 1);
    EXPECT_TRUE(t.is_polynomial());
    EXPECT_EQ(t, RationalFunction(2 * L - 1));
    EXPECT_THROW(RationalFunction().inverse(), DivisionByZero);
    EXPECT_THROW(RationalFunction(L, MultiPoly()), DivisionByZero);
}

TEST(RationalFunction, CanonicalDenominatorIsMonic) {
    RationalFunction r(L, 4 * L + 2);
    EXPECT_EQ(r.den().leading_coefficient(), GaussianRational(1));
    EXPECT_EQ(r.num(), MultiPoly(make_rational(1, 4)) * L);
    EXPECT_EQ(r.normalized(), r);
}

TEST(RationalFunction, PoleOnSubstitution) {
    RationalFunction r(MultiPoly(1), 2 * L + 1);
    EXPECT_THROW(r.substitute(sym::lambda(), GaussianRational(make_rational(-1, 2))), EvaluationAtPole);
    EXPECT_EQ(r.substitute(sym::lambda(), GaussianRational(1)), RationalFunction(make_rational(1, 3)));
}

TEST(RationalFunction, FieldAxiomsSeeded) {
    Rng rng(31337);
    for (int k = 0; k < 1000; ++k) {
        RationalFunction a = random_ratfun(rng), b = random_ratfun(rng), c = random_ratfun(rng);
        ASSERT_EQ((a + b) + c, a + (b + c));
        ASSERT_EQ(a * b, b * a);
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        if (!a.is_zero()) {
            ASSERT_EQ(a * a.inverse(), RationalFunction(1));
        }
        ASSERT_EQ(a.normalized(), a);
    }
}

TEST(Serialize, RoundTripAndShape) {
    MultiPoly p = 2 * L + N - 3 + MultiPoly(GaussianRational::i()) * L * N;
    Json j = to_json(p);
    EXPECT_EQ(j.dump(),
              R"({"symbols":["lambda","n"],"terms":[{"exp":[1,1],"re":"0","im":"1"},{"exp":[1,0],"re":"2","im":"0"},)"
              R"({"exp":[0,1],"re":"1","im":"0"},{"exp":[0,0],"re":"-3","im":"0"}]})");
    EXPECT_EQ(multipoly_from_json(j), p);
    RationalFunction r(L, 2 * L + 1);
    EXPECT_EQ(ratfun_from_json(to_json(r)), r);
}
