#pragma once

#include "spinres/opalgebra/opalgebra.hpp"
#include "spinres/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spinres::resfam {

using op::OpPoly;

// Flat solution operator T_l(h; lambda):
//   T_{2k}   = D~^{2k}   / (2^{2k}   k! (1/2+lambda)_k),
//   T_{2k+1} = D~^{2k+1} / (2^{2k+1} k! (1/2+lambda)_{k+1}),  D~ = e_n D_T.
OpPoly solution_op_flat(unsigned l);

// delta^+_order(h; lambda) in normal form, coefficients rational in lambda.
OpPoly delta_plus(unsigned order);

struct Pole {
    Rational at;
    unsigned multiplicity;
    friend bool operator==(const Pole&, const Pole&) = default;
};
// Poles in lambda of delta_plus(order), ascending.
std::vector<Pole> pole_structure(unsigned order);

// Residue route. The symbol n is the ambient dimension; the boundary
// dimension is n - 1. Throws DomainError if a denominator survives.
OpPoly resfam_via_residue(unsigned order);

// Closed form in terms of the Gegenbauer table. Memoized, thread safe.
const OpPoly& resfam_explicit(unsigned order);

// (D_T + D_N)^(2M+1) by repeated normal-ordered multiplication.
OpPoly dirac_power_expand(unsigned M);
// sum_l C(M, floor(l/2)) D_T^l D_N^(2M+1-l).
OpPoly dirac_power_binomial(unsigned M);

// Largest lambda-degree among the coefficients.
unsigned lambda_degree(const OpPoly& family);

// Specialization n := m + 1 for boundary dimension m.
OpPoly at_boundary_dim(const OpPoly& family, unsigned m);

// lambda := value in a family.
OpPoly at_lambda(const OpPoly& family, const MultiPoly& value);

struct FactorizationInstance {
    std::string key;
    OpPoly lhs;
    OpPoly rhs;
};

// Instances with family order <= order_max.
//   even: D_2N(2N-n/2-M)   = e_n D_T^(2M+1) D_(2N-2M-1)(same),   N>=1, 0<=M<=N-1
//   odd:  D_2N+1(2N+1-n/2-M) = e_n D_T^(2M+1) D_(2N-2M)(same),   N>=1, 0<=M<=N
std::vector<FactorizationInstance> left_factorization_instances(unsigned order_max);
//   even: D_2N((1-n)/2+M)   = -e_n D_(2(N-M-1)+1)(-(1+n)/2-M) (D_T+D_N)^(2M+1), N>=1, 0<=M<=N-1
//   odd:  D_2N+1((1-n)/2+M) =  e_n D_(2N-2M)(-(n+1)/2-M) (D_T+D_N)^(2M+1),      N>=1, 0<=M<=N
std::vector<FactorizationInstance> right_factorization_instances(unsigned order_max);
// The low-order worked examples (orders 1..3).
std::vector<FactorizationInstance> example_factorizations();

// Symbolic verification of instances (n formal), in parallel.
CheckReport verify_instances(const std::string& name, const std::vector<FactorizationInstance>& instances,
                             unsigned jobs);
CheckReport verify_left_factorizations(unsigned order_max, unsigned jobs);
CheckReport verify_right_factorizations(unsigned order_max, unsigned jobs);

// Regression layer: both theorems at `samples` seeded rational values of n.
CheckReport verify_factorizations_sampled(unsigned order_max, unsigned samples, std::uint64_t seed, unsigned jobs);

// resfam_via_residue(N) == resfam_explicit(N) for N <= order_max, plus the
// polynomiality and lambda-degree invariants.
CheckReport verify_oracle(unsigned order_max, unsigned jobs);

// dirac_power_expand(M) == dirac_power_binomial(M) for M <= m_max.
CheckReport verify_dirac_power(unsigned m_max);

// Pole sets of delta_plus(order) against {-k-1/2}, order <= order_max.
CheckReport verify_pole_structure(unsigned order_max);

}  // namespace spinres::resfam
