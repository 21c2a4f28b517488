#pragma once

#include "spinres/gegenbauer/gegenbauer.hpp"
#include "spinres/report.hpp"

#include <cstdint>

namespace spinres::gegenbauer {

// Two-term recurrences in j for a and b, 1 <= j <= N <= n_max, as polynomial
// identities in lambda and n. The b-recurrence is checked with the factor
// (2N - 2j + 3); the variant with a lower-case dimension symbol in that factor
// is evaluated as well and its hold count is reported under info.
std::vector<CheckReport> check_coeff_recurrences(unsigned n_max);

// Even and odd table-versus-C_k^{-lambda-(n-1)/2}(x) identities for N <= n_max.
std::vector<CheckReport> check_table_vs_gegenbauer(unsigned n_max);

// All four constructions agree for k <= max_degree with formal alpha.
CheckReport check_cross_construction(unsigned max_degree);

// d/dx C_{2N}^alpha = 2 alpha C_{2N-1}^{alpha+1} for 2N <= max_degree.
CheckReport check_derivative_identity(unsigned max_degree);

// Reconstruction of the singular-vector generating polynomials in t from the
// table, N <= n_max. The pass condition uses the normalization
//   t^N C_{2N}(i/sqrt t)  and  -i t^(N+1) t^(-1/2) C_{2N+1}(i/sqrt t);
// the ratio between the (-t)^N-prefixed forms and the table forms is
// measured and reported under info.
std::vector<CheckReport> check_singular_polynomials(unsigned n_max);

// Three Pochhammer/binomial sum identities, brute-forced over their stated
// (N, M, j) ranges with N <= n_max (n_max >= 2).
std::vector<CheckReport> check_pochhammer_identities(unsigned n_max);

// Right-hand side S[N] of the first Pochhammer identity, summed term by term.
// Throws UsageError outside 1 <= M <= N-M-1, M <= j <= N-M-1.
Rational pochhammer_sum_item1(int N, int M, int j);

// N(1+2N) S[N] - (2M-2N-1)(M-N) S[N+1] = 0 for every N in [n_lo, n_hi] and
// every j valid for both N and N+1; also S[N] = (N-M)_M (N-M+1/2)_M.
// Throws UsageError when n_lo < 2M+1 (no valid j).
CheckReport check_gosper_recurrence(int M, int n_lo, int n_hi);

struct SaalschutzValues {
    Rational series;
    Rational closed_form;
};
// 3F2(a, b, -n; c, 1+a+b-c-n; 1) summed directly versus
// (c-a)_n (c-b)_n / ((c)_n (c-a-b)_n). Throws UsageError ("invalid sample")
// when a lower parameter Pochhammer or the closed-form denominator vanishes.
SaalschutzValues pfaff_saalschutz(const Rational& a, const Rational& b, const Rational& c, unsigned n);

// `samples` seeded random (a, b, c, n <= max_n); invalid draws are redrawn.
CheckReport check_pfaff_saalschutz(unsigned samples, unsigned max_n, std::uint64_t seed);

// The four coefficient relations between a^(N), b^(N-1) (even) and a^(N), b^(N)
// (odd) at the shifted argument lambda + 1/2, for N <= n_max.
std::vector<CheckReport> check_singular_relations(unsigned n_max);

}  // namespace spinres::gegenbauer
