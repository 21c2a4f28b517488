#include "spinres/clifford/clifford.hpp"
#include "spinres/errors.hpp"
#include "spinres/resfam/resfam.hpp"

#include <gtest/gtest.h>

using namespace spinres;
using namespace spinres::clifford;
using op::OpPoly;

namespace {

MultiPoly x(unsigned i) { return MultiPoly::variable(sym::x(i)); }

}  // namespace

TEST(Clifford, RepresentationSizes) {
    EXPECT_EQ(CliffordRep::build(0, 3).spinor_dim(), 2u);
    EXPECT_EQ(CliffordRep::build(0, 4).spinor_dim(), 4u);
    EXPECT_EQ(CliffordRep::build(0, 5).spinor_dim(), 4u);
    EXPECT_THROW(CliffordRep::build(0, 0), UsageError);
    const auto rep = CliffordRep::build(0, 2);
    EXPECT_EQ(rep.e(1) * rep.e(1), CMatrix::identity(2) * GaussianRational(-1));
}

TEST(Clifford, DefiningRelations) {
    for (unsigned p = 0; p <= 2; ++p) {
        for (unsigned q = 1; q <= 5; ++q) {
            auto r = check_defining_relations(CliffordRep::build(p, q));
            EXPECT_TRUE(r.passed()) << p << "," << q << " " << r.to_json().dump();
            EXPECT_EQ(r.instances, (p + q) * (p + q + 1) / 2);
        }
    }
}

TEST(Clifford, FingerprintStableAndDistinct) {
    EXPECT_EQ(CliffordRep::build(0, 4).fingerprint(), CliffordRep::build(0, 4).fingerprint());
    EXPECT_NE(CliffordRep::build(0, 4).fingerprint(), CliffordRep::build(1, 3).fingerprint());
    EXPECT_EQ(CliffordRep::build(0, 4).fingerprint().size(), 16u);
}

TEST(Clifford, RealizerBasics) {
    const auto rep = CliffordRep::build(0, 3);
    const Realizer real(rep);
    Rng rng(5);
    for (int s = 0; s < 25; ++s) {
        const auto psi = random_field(rng, rep.spinor_dim(), 3, 4);
        // iota^* (x_n psi) = 0.
        PolySpinorField xpsi = psi;
        for (auto& c : xpsi.comp) c *= x(3);
        EXPECT_TRUE(real.restrict(xpsi).is_zero());
        EXPECT_TRUE((real.d_t(real.d_n(psi)) + real.d_n(real.d_t(psi))).is_zero());
        const auto dtilde = [&](const PolySpinorField& f) { return real.e_n(real.d_t(f)); };
        EXPECT_EQ(dtilde(dtilde(psi)), real.d_t(real.d_t(psi)));
        EXPECT_EQ(real.apply(OpPoly::partial_n(), psi), scale(GaussianRational(-1), real.e_n(real.d_n(psi))));
    }
}

// D_T on a hand-built field: psi = (x_1, 0) in dimension 3, D_T psi = e_1 (1, 0).
TEST(Clifford, DiracOnLinearField) {
    const auto rep = CliffordRep::build(0, 3);
    const Realizer real(rep);
    PolySpinorField psi = zero_field(2);
    psi.comp[0] = x(1);
    const auto got = real.d_t(psi);
    EXPECT_EQ(got.comp[0], MultiPoly(rep.e(1)(0, 0)));
    EXPECT_EQ(got.comp[1], MultiPoly(rep.e(1)(1, 0)));
}

TEST(Clifford, RealizationIsHomomorphism) {
    for (unsigned q : {3u, 4u}) {
        auto r = check_realization_consistency(CliffordRep::build(0, q), 60, 4, 100 + q);
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
        EXPECT_EQ(r.instances, 60u);
    }
}

TEST(Clifford, PoleInRealizationReported) {
    const auto rep = CliffordRep::build(0, 3);
    const Realizer real(rep);
    Rng rng(9);
    const auto psi = random_field(rng, 2, 3, 3);
    const std::map<Symbol, GaussianRational> at{{sym::lambda(), GaussianRational(make_rational(-1, 2))}};
    EXPECT_THROW(real.apply(resfam::solution_op_flat(1), psi, at), EvaluationAtPole);
}

TEST(Clifford, FactorizationRealizations) {
    for (unsigned n : {3u, 4u, 5u}) {
        auto r = check_factorization_realizations(CliffordRep::build(0, n), 5, 3, 6, 31 * n, 1);
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
        EXPECT_GT(r.instances, 24u);
    }
}

TEST(Clifford, SeparatingFamily) {
    for (unsigned n : {3u, 4u}) {
        auto r = check_separating_family(CliffordRep::build(0, n), 2, 2, 2, 17);
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
        EXPECT_EQ(r.info["rank"].get<std::size_t>(), 18u);
    }
}

TEST(Clifford, RiemannianProjectors) {
    for (unsigned q = 2; q <= 5; ++q) {
        auto r = check_signature_projectors(CliffordRep::build(0, q));
        EXPECT_TRUE(r.passed()) << r.to_json().dump();
    }
}

// With e_n^2 = -1 and odd p the printed factor (±i)^(p+1) is real, so the
// projectors square to something else.
TEST(Clifford, OddPProjectorsAreNotIdempotent) {
    const auto rep = CliffordRep::build(1, 2);
    auto r = check_signature_projectors(rep);
    EXPECT_FALSE(r.passed());
    const auto [pp, pm] = signature_projectors(rep);
    EXPECT_NE(pp * pp, pp);
    // (+i)^2 = (-i)^2, so both signs give the same matrix.
    EXPECT_EQ(pp, pm);
    EXPECT_NE(pp + pm, CMatrix::identity(rep.spinor_dim()));
}

TEST(Clifford, EigenRecurrence) {
    for (unsigned m : {3u, 4u}) {
        for (const Rational& lam : {make_rational(1, 3), make_rational(2, 5), make_rational(7, 2)}) {
            auto res = eigen_recurrence_check(m, lam, 8, 10, 9, 1000 + m);
            EXPECT_TRUE(res.report.passed()) << res.report.to_json().dump();
            EXPECT_EQ(res.report.instances, 10u * 9u * 2u);
            ASSERT_EQ(res.grades.size(), 10u);
            EXPECT_FALSE(res.grades[0][0].is_zero());
        }
    }
}

TEST(Clifford, EigenRecurrenceOracleAtGradeOne) {
    // psi_1 = e_n D_T psi_0 / (2 (lambda + 1/2)), checked from the recurrence directly.
    const auto rep = CliffordRep::build(0, 4);
    const Realizer real(rep);
    Rng rng(3);
    const Rational lam = make_rational(5, 7);
    const auto phi = random_field(rng, rep.spinor_dim(), 3, 3);
    auto res = eigen_recurrence_for(rep, lam, 1, {phi});
    const auto& psi = res.grades[0];
    const GaussianRational c = GaussianRational(1) / GaussianRational(2 * lam + 1);
    EXPECT_EQ(psi[1], scale(c, real.e_n(real.d_t(psi[0]))));
    EXPECT_EQ(real.e_n(psi[0]), scale(GaussianRational::i(), psi[0]));
}

TEST(Clifford, MinusEigenspaceKilledByProjector) {
    const auto rep = CliffordRep::build(0, 3);
    const auto pp = signature_projectors(rep).first;
    const Realizer real(rep);
    Rng rng(4);
    const auto phi = random_field(rng, rep.spinor_dim(), 2, 3);
    // (1 + i e_n) phi lies in the -i eigenspace.
    const auto minus = phi + scale(GaussianRational::i(), real.e_n(phi));
    EXPECT_EQ(real.e_n(minus), scale(-GaussianRational::i(), minus));
    EXPECT_TRUE(apply(pp, minus).is_zero());
    auto res = eigen_recurrence_for(rep, make_rational(1, 3), 3, {minus});
    EXPECT_TRUE(res.report.passed());
    for (const auto& g : res.grades[0]) EXPECT_TRUE(g.is_zero());
}

TEST(Clifford, EigenPreconditions) {
    EXPECT_THROW(eigen_recurrence_check(3, make_rational(-1, 2), 4, 1, 3, 1), PreconditionViolation);
    EXPECT_THROW(eigen_recurrence_check(3, make_rational(-7, 2), 4, 1, 3, 1), PreconditionViolation);
    EXPECT_NO_THROW(eigen_recurrence_check(3, make_rational(1, 2), 2, 1, 3, 1));
    EXPECT_THROW(eigen_recurrence_check(3, make_rational(1, 3), 0, 1, 3, 1), UsageError);
}
