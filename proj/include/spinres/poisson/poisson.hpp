#pragma once

#include "spinres/clifford/clifford.hpp"
#include "spinres/random.hpp"
#include "spinres/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace spinres::poisson {

// u_1^{u[0]} ... u_{n-1}^{u[n-2]} * y_n^(j mu + k) * R^s * e_B, where
// u_i = y_i - x'_i, R = |y - x'|^2, B is a bitmask over e_1..e_n and j = mu_mult.
// The kernel itself lives at j = 1; j = 0 gives mu-free factors.
struct KernelKey {
    std::vector<unsigned> u;
    int k = 0;
    Rational s;
    unsigned blade = 0;
    unsigned mu_mult = 1;

    friend bool operator<(const KernelKey& a, const KernelKey& b);
    friend bool operator==(const KernelKey&, const KernelKey&) = default;
};

// Finite sums of KernelKey terms with coefficients polynomial in mu. Kept
// canonical: u_1 appears with exponent <= 1 (u_1^2 is rewritten through R),
// zero coefficients are dropped. Canonical forms are unique, so equality is
// structural.
class KernelExpr {
public:
    explicit KernelExpr(unsigned n = 2);

    unsigned n() const { return n_; }
    const std::map<KernelKey, MultiPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    MultiPoly coefficient(const KernelKey& key) const;

    void add_term(KernelKey key, const MultiPoly& c);

    KernelExpr operator-() const;
    KernelExpr& operator+=(const KernelExpr& o);
    KernelExpr& operator-=(const KernelExpr& o);
    KernelExpr& operator*=(const MultiPoly& c);
    friend KernelExpr operator+(KernelExpr a, const KernelExpr& b) { return a += b; }
    friend KernelExpr operator-(KernelExpr a, const KernelExpr& b) { return a -= b; }
    friend KernelExpr operator*(const MultiPoly& c, KernelExpr a) { return a *= c; }
    // Pointwise product; Clifford parts multiply in order.
    friend KernelExpr operator*(const KernelExpr& a, const KernelExpr& b);
    friend bool operator==(const KernelExpr&, const KernelExpr&) = default;

    std::string to_string() const;
    Json to_json() const;

private:
    unsigned n_;
    std::map<KernelKey, MultiPoly> terms_;
};

// e_i * e_B = sign * e_{B xor i}, with e_i^2 = -1.
std::pair<int, unsigned> blade_left_mul(unsigned i, unsigned blade);
std::pair<int, unsigned> blade_mul(unsigned a, unsigned b);

// y_n^mu R^(-n/2) (sum_{i<n} u_i e_i + y_n e_n) e_n, one term per basis vector.
KernelExpr kernel_build(unsigned n);
// d/dy_i, 1 <= i <= n.
KernelExpr kernel_diff(const KernelExpr& e, unsigned i);
// e_i * E.
KernelExpr left_mul(unsigned i, const KernelExpr& e);
// y_n^j * E.
KernelExpr mul_yn(int j, const KernelExpr& e);
// y_n e_n d_n - (n-1)/2 e_n + y_n sum_{i<n} e_i d_i.
KernelExpr hyp_dirac(const KernelExpr& e);

struct Sample {
    std::vector<Rational> y;       // y_1..y_n, y_n > 0
    std::vector<Rational> xprime;  // x'_1..x'_{n-1}
    Rational mu;
};
Sample random_sample(Rng& rng, unsigned n);

// E / (y_n^mu R^(-n/2)) at the sample, per blade. Throws DomainError when a
// term has mu_mult != 1 or an R-exponent outside -n/2 + Z.
std::map<unsigned, GaussianRational> evaluate_reduced(const KernelExpr& e, const Sample& at);

struct EigenCheck {
    CheckReport report;
    std::optional<MultiPoly> c;  // solved on the leading term
    bool proportional = false;
    bool matches_claim = false;  // c == mu - (n-1)/2
    std::optional<MultiPoly> twisted_c;
    bool twisted_holds = false;  // D K == c' e_n K
};

// Solves D K = c K on the leading term, confirms it symbolically and at
// `samples` seeded points.
EigenCheck eigen_check(unsigned n, unsigned samples, std::uint64_t seed, unsigned jobs = 1);

// Pi_± = 1/2 (Id ± i omega), omega = w / |w| for random rational w, with
// sigma = 1/|w| carried symbolically (sigma^2 = 1/|w|^2).
CheckReport projector_check(const clifford::CliffordRep& rep, unsigned samples, std::uint64_t seed);

}  // namespace spinres::poisson
