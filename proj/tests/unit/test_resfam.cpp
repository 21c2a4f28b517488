#include "../common/displayed_families.hpp"
#include "spinres/errors.hpp"
#include "spinres/resfam/resfam.hpp"

#include <gtest/gtest.h>

#include <chrono>

using namespace spinres;
using namespace spinres::resfam;
using op::OpMonomial;

namespace {

const MultiPoly L = MultiPoly::variable(sym::lambda());
const MultiPoly Nn = MultiPoly::variable(sym::n());

OpPoly word(unsigned eps, unsigned a, unsigned b, const RationalFunction& c = RationalFunction(1)) {
    return OpPoly(OpMonomial{eps, a, b, true}, c);
}

}  // namespace

TEST(ResFam, DisplayedLowOrderFamiliesBothRoutes) {
    const auto shown = testdata::displayed_families();
    for (unsigned order = 1; order <= 4; ++order) {
        EXPECT_EQ(resfam_explicit(order), shown[order - 1]) << order;
        EXPECT_EQ(resfam_via_residue(order), shown[order - 1]) << order;
    }
    EXPECT_EQ(resfam_explicit(0), OpPoly::iota());
    EXPECT_EQ(resfam_via_residue(0), OpPoly::iota());
}

TEST(ResFam, SolutionOperators) {
    EXPECT_EQ(solution_op_flat(0), OpPoly::identity());
    EXPECT_EQ(solution_op_flat(1), RationalFunction(MultiPoly(1), 2 * L + 1) * OpPoly::d_tilde());
    EXPECT_EQ(solution_op_flat(2), RationalFunction(MultiPoly(1), 4 * L + 2) * op::pow(OpPoly::d_t(), 2));
}

TEST(ResFam, DeltaFamiliesAndPoles) {
    EXPECT_EQ(delta_plus(0), OpPoly::iota());
    const RationalFunction half_inv(MultiPoly(1), 2 * L + 1);
    EXPECT_EQ(delta_plus(1), word(1, 1, 0, half_inv) - word(1, 0, 1));
    EXPECT_TRUE(pole_structure(0).empty());
    EXPECT_EQ(pole_structure(2), (std::vector<Pole>{{make_rational(-1, 2), 1}}));
    EXPECT_EQ(pole_structure(5),
              (std::vector<Pole>{{make_rational(-5, 2), 1}, {make_rational(-3, 2), 1}, {make_rational(-1, 2), 1}}));
    auto r = verify_pole_structure(12);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(ResFam, OracleEquivalenceAndDegreeBound) {
    auto r = verify_oracle(10, 1);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
    for (unsigned order = 0; order <= 10; ++order) EXPECT_LE(lambda_degree(resfam_explicit(order)), order / 2 + 1);
}

TEST(ResFam, DiracPower) {
    EXPECT_EQ(dirac_power_expand(0), OpPoly::d_t() + OpPoly::d_n());
    OpPoly m1;
    for (unsigned l = 0; l <= 3; ++l) m1 += OpPoly(OpMonomial{0, l, 3 - l, false});
    EXPECT_EQ(dirac_power_expand(1), m1);
    EXPECT_TRUE(verify_dirac_power(8).passed());
}

TEST(ResFam, WorkedFactorizationExamples) {
    auto r = verify_instances("examples", example_factorizations(), 1);
    EXPECT_EQ(r.instances, 8u);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(ResFam, FactorizationTheoremsSymbolic) {
    auto left = verify_left_factorizations(12, 2);
    EXPECT_TRUE(left.passed()) << left.to_json().dump();
    auto right = verify_right_factorizations(12, 2);
    EXPECT_TRUE(right.passed()) << right.to_json().dump();
    EXPECT_THROW(verify_left_factorizations(1, 1), UsageError);
}

TEST(ResFam, FactorizationsAtSampledDimensions) {
    auto r = verify_factorizations_sampled(8, 5, 99, 2);
    EXPECT_TRUE(r.passed()) << r.to_json().dump();
}

TEST(ResFam, SubstitutionAtPoleNamesMonomial) {
    EXPECT_THROW(solution_op_flat(3).substitute(sym::lambda(), GaussianRational(make_rational(-3, 2))), EvaluationAtPole);
}
