#include "spinres/errors.hpp"
#include "spinres/opalgebra/opalgebra.hpp"
#include "spinres/random.hpp"

#include <gtest/gtest.h>

#include <optional>

using namespace spinres;
using namespace spinres::op;

namespace {

const MultiPoly L = MultiPoly::variable(sym::lambda());
const MultiPoly Nn = MultiPoly::variable(sym::n());

const OpPoly E = OpPoly::e_n(), T = OpPoly::d_t(), Dn = OpPoly::d_n(), I = OpPoly::iota();

// Naive rewriting oracle on letter words (leftmost letter acts last).
// Letters: 'E' e_n, 'T' D_T, 'N' D_N, 'P' partial_n, 'I' iota^*.
struct OracleResult {
    int sign = 1;
    bool zero_scalar = false;
    std::string word;
};

std::optional<OracleResult> oracle_normalize(const std::string& input) {
    OracleResult r;
    for (char ch : input) {
        if (ch == 'P') {
            r.sign = -r.sign;
            r.word += "EN";
        } else {
            r.word += ch;
        }
    }
    if (std::count(r.word.begin(), r.word.end(), 'I') > 1) return std::nullopt;
    auto rank = [](char c) { return c == 'E' ? 0 : c == 'T' ? 1 : c == 'I' ? 2 : 3; };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t k = 0; k + 1 < r.word.size(); ++k) {
            const char x = r.word[k], y = r.word[k + 1];
            if (x == 'E' && y == 'E') {
                r.sign = -r.sign;
                r.word.erase(k, 2);
                changed = true;
                break;
            }
            if (rank(x) <= rank(y)) continue;
            if (x == 'N' && y == 'I') return std::nullopt;
            if ((x == 'T' && y == 'E') || (x == 'N' && y == 'T')) r.sign = -r.sign;
            std::swap(r.word[k], r.word[k + 1]);
            changed = true;
        }
    }
    return r;
}

OpPoly letter(char c) {
    switch (c) {
        case 'E': return E;
        case 'T': return T;
        case 'N': return Dn;
        case 'P': return OpPoly::partial_n();
        default: return I;
    }
}

OpMonomial monomial_of(const std::string& sorted) {
    OpMonomial m;
    for (char c : sorted) {
        if (c == 'E') m.eps += 1;
        if (c == 'T') m.a += 1;
        if (c == 'N') m.b += 1;
        if (c == 'I') m.restricted = true;
    }
    return m;
}

// Product of letters[lo, hi) with a random split point at every level.
OpPoly random_bracketing(Rng& rng, const std::string& w, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return letter(w[lo]);
    const auto mid = static_cast<std::size_t>(rng.uniform(static_cast<std::int64_t>(lo) + 1, static_cast<std::int64_t>(hi) - 1));
    return random_bracketing(rng, w, lo, mid) * random_bracketing(rng, w, mid, hi);
}

}  // namespace

TEST(OpAlgebra, BasicRelations) {
    EXPECT_EQ(E * E, -OpPoly::identity());
    EXPECT_EQ(I * T, T * I);
    EXPECT_EQ((I * T).terms().begin()->first, (OpMonomial{0, 1, 0, true}));
    EXPECT_EQ(T * Dn, -(Dn * T));
    EXPECT_EQ(E * T, -(T * E));
    EXPECT_EQ(E * Dn, Dn * E);
    EXPECT_EQ(OpPoly::partial_n(), -(E * Dn));
    EXPECT_EQ(OpPoly::d_tilde() * OpPoly::d_tilde(), T * T);
    EXPECT_EQ(Dn * Dn * T, T * Dn * Dn);
}

TEST(OpAlgebra, RestrictionDomainErrors) {
    EXPECT_THROW(I * I, DomainError);
    EXPECT_THROW(Dn * I, DomainError);
    EXPECT_NO_THROW(E * T * I * Dn);
    // D_N composed on the right of a restricted word picks up the D_T-parity sign.
    EXPECT_EQ((T * I) * Dn * T, -(T * T * I * Dn));
}

TEST(OpAlgebra, AdditionAndScalars) {
    const OpPoly A = (2 * L + 1) * (T * I) + E * I * Dn;
    EXPECT_TRUE((A + RationalFunction(-1) * A).is_zero());
    const RationalFunction inv(MultiPoly(1), 2 * L + 1);
    EXPECT_EQ(RationalFunction(2 * L + 1) * (inv * A), A);
    EXPECT_EQ(T * I + T * I, RationalFunction(2) * (T * I));
}

TEST(OpAlgebra, SubstitutionAndPoles) {
    const OpPoly d1 = E * (T * I - RationalFunction(2 * L + Nn - 2) * (I * Dn));
    const MultiPoly at = MultiPoly(make_rational(-1, 2)) * (Nn - 2);
    EXPECT_EQ(d1.substitute(sym::lambda(), at), E * T * I);
    EXPECT_TRUE(OpPoly().substitute(sym::lambda(), GaussianRational(0)).is_zero());
    const OpPoly t1 = RationalFunction(MultiPoly(1), 2 * L + 1) * OpPoly::d_tilde();
    try {
        t1.substitute(sym::lambda(), GaussianRational(make_rational(-1, 2)));
        FAIL() << "expected a pole";
    } catch (const EvaluationAtPole& e) {
        EXPECT_NE(std::string(e.what()).find("e_n D_T"), std::string::npos) << e.what();
    }
}

TEST(OpAlgebra, EmitIdentityAndSecondFamily) {
    EXPECT_EQ(I.to_latex(), "\\iota^*");
    EXPECT_EQ(I.to_json().dump(), R"([{"eps":0,"a":0,"b":0,"coeff":"1"}])");
    const OpPoly d2 = T * T * I - RationalFunction(2) * (T * I * Dn) - RationalFunction(2 * L + Nn - 4) * (I * Dn * Dn);
    EXPECT_EQ(d2.to_latex(), "-(2\\lambda+n-4) \\iota^* D_N^{2} - 2 D_T \\iota^* D_N + D_T^{2} \\iota^*");
}

TEST(OpAlgebra, ConfluenceAgainstRewritingOracle) {
    Rng rng(1234567);
    const std::string alphabet = "ETNPI";
    int checked = 0, rejected = 0;
    for (int s = 0; s < 10000; ++s) {
        const auto len = static_cast<std::size_t>(rng.uniform(1, 12));
        std::string w;
        for (std::size_t k = 0; k < len; ++k) {
            // Keep restrictions rare so most words are composable.
            char c = alphabet[static_cast<std::size_t>(rng.uniform(0, 4))];
            if (c == 'I' && rng.uniform(0, 3) != 0) c = 'T';
            w += c;
        }
        auto expected = oracle_normalize(w);
        if (!expected) {
            EXPECT_THROW(random_bracketing(rng, w, 0, w.size()), DomainError) << w;
            ++rejected;
            continue;
        }
        const OpPoly got = random_bracketing(rng, w, 0, w.size());
        const OpPoly want(monomial_of(expected->word), RationalFunction(expected->sign));
        ASSERT_EQ(got, want) << w;
        ++checked;
    }
    EXPECT_GT(checked, 8000);
    EXPECT_GT(rejected, 0);
}

TEST(OpAlgebra, AssociativitySeeded) {
    Rng rng(77);
    auto random_ambient = [&] {
        OpPoly p;
        for (int k = 0; k < 3; ++k) {
            OpMonomial m{static_cast<unsigned>(rng.uniform(0, 1)), static_cast<unsigned>(rng.uniform(0, 3)),
                         static_cast<unsigned>(rng.uniform(0, 3)), false};
            p += OpPoly(m, RationalFunction(rng.rational(5, 3)) + RationalFunction(L) * RationalFunction(rng.rational(3, 2)));
        }
        return p;
    };
    for (int s = 0; s < 300; ++s) {
        OpPoly a = random_ambient(), b = random_ambient(), c = random_ambient();
        ASSERT_EQ((a * b) * c, a * (b * c));
        ASSERT_EQ(a * (b + c), a * b + a * c);
        ASSERT_EQ((I * a) * b, I * (a * b));
    }
}
