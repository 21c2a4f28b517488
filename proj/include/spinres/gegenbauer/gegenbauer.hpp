#pragma once

#include "spinres/arith/ratfun.hpp"

#include <memory>
#include <vector>

namespace spinres::gegenbauer {

// Even-degree coefficient a_j^(N)(lambda) in the symbols lambda, n:
//   N! (-2)^(N-j) / (j! (2N-2j)!) * prod_{k=j}^{N-1} (2 lambda - 4N + 2k + n + 1) * (-1)^N.
// Throws UsageError unless 0 <= j <= N.
MultiPoly coeff_a(int N, int j);

// Odd-degree coefficient b_j^(N)(lambda):
//   N! (-2)^(N-j) / (j! (2N-2j+1)!) * prod_{k=j}^{N-1} (2 lambda - 4N + 2k + n - 1) * (-1)^N.
MultiPoly coeff_b(int N, int j);

// lambda -> lambda + shift.
MultiPoly shift_lambda(const MultiPoly& p, const Rational& shift);

// Memoized a and b up to a maximal N. Immutable after construction.
class GegenbauerTable {
public:
    explicit GegenbauerTable(unsigned max_order);

    unsigned max_order() const { return max_order_; }

    // Throw UsageError outside 0 <= j <= N <= max_order.
    const MultiPoly& a(int N, int j) const;
    const MultiPoly& b(int N, int j) const;

    // Zero outside 0 <= j <= N (covers the a_{-1} = b_{-1} = 0 convention).
    MultiPoly a_or_zero(int N, int j) const;
    MultiPoly b_or_zero(int N, int j) const;

private:
    unsigned max_order_;
    std::vector<std::vector<MultiPoly>> a_, b_;
};

// Process-wide table covering at least max_order; grown on demand.
std::shared_ptr<const GegenbauerTable> shared_table(unsigned max_order);

enum class Method { generating, recurrence, explicit_sum, hypergeometric };
const char* method_name(Method m);

// C_k^alpha(x) as a coefficient list in x (index = power). alpha is a
// rational constant or a rational function of formal symbols.
struct GegenbauerPoly {
    unsigned degree = 0;
    RationalFunction alpha;
    std::vector<RationalFunction> coeffs;

    friend bool operator==(const GegenbauerPoly& a, const GegenbauerPoly& b) {
        return a.degree == b.degree && a.alpha == b.alpha && a.coeffs == b.coeffs;
    }
    // d/dx as a coefficient list.
    std::vector<RationalFunction> derivative() const;
};

// For Method::generating the series is expanded to `expansion_order`
// (defaulting to k); an order below k is a UsageError. The hypergeometric
// form divides by (alpha + 1/2)_m and throws DivisionByZero where that vanishes.
GegenbauerPoly gegenbauer_poly(unsigned k, const RationalFunction& alpha, Method method, int expansion_order = -1);

// C_0 .. C_order from one truncated expansion of (1 - 2xt + t^2)^(-alpha).
std::vector<GegenbauerPoly> gegenbauer_series(const RationalFunction& alpha, unsigned order);

}  // namespace spinres::gegenbauer
