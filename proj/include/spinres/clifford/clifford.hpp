#pragma once

#include "spinres/opalgebra/opalgebra.hpp"
#include "spinres/random.hpp"
#include "spinres/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace spinres::clifford {

class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}
    static CMatrix identity(std::size_t dim);

    std::size_t dim() const { return dim_; }
    const GaussianRational& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }
    GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }

    bool is_zero() const;
    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(const GaussianRational& s);
    friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
    friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
    friend CMatrix operator*(CMatrix a, const GaussianRational& s) { return a *= s; }
    friend CMatrix operator*(const GaussianRational& s, CMatrix a) { return a *= s; }
    friend CMatrix operator*(const CMatrix& a, const CMatrix& b);
    friend bool operator==(const CMatrix&, const CMatrix&) = default;

    // Kronecker product.
    friend CMatrix kron(const CMatrix& a, const CMatrix& b);

    std::string to_string() const;

private:
    std::size_t dim_ = 0;
    std::vector<GaussianRational> data_;
};

// Gamma matrices for Cl(R^{p,q}), n = p + q, of size 2^floor(n/2), entries in
// {0, ±1, ±i}. e_i^2 = +1 for i <= p and -1 otherwise. Built from iterated
// Pauli tensor products; for odd n the last generator is i times the product
// of sigma_3 factors, which fixes the irreducible.
class CliffordRep {
public:
    static CliffordRep build(unsigned p, unsigned q);

    unsigned p() const { return p_; }
    unsigned q() const { return q_; }
    unsigned n() const { return p_ + q_; }
    std::size_t spinor_dim() const { return dim_; }
    // 1-based.
    const CMatrix& e(unsigned i) const { return gens_.at(i - 1); }
    // e_i^2 as a scalar: +1 or -1.
    int square(unsigned i) const { return i <= p_ ? 1 : -1; }

    // FNV-1a hash of all generator entries, hex.
    std::string fingerprint() const;
    // e_1 e_2 ... e_n (a scalar for odd n).
    CMatrix volume() const;

private:
    unsigned p_ = 0, q_ = 0;
    std::size_t dim_ = 1;
    std::vector<CMatrix> gens_;
};

// Spinor-valued polynomial in x_1..x_n.
struct PolySpinorField {
    std::vector<MultiPoly> comp;

    bool is_zero() const;
    PolySpinorField& operator+=(const PolySpinorField& o);
    friend PolySpinorField operator+(PolySpinorField a, const PolySpinorField& b) { return a += b; }
    friend bool operator==(const PolySpinorField&, const PolySpinorField&) = default;
};

PolySpinorField zero_field(std::size_t dim);
PolySpinorField apply(const CMatrix& m, const PolySpinorField& f);
PolySpinorField scale(const GaussianRational& s, const PolySpinorField& f);

// Random field of total degree <= degree in x_1..x_vars with Gaussian-rational
// coefficients; `terms` random monomials per component, or every monomial when 0.
PolySpinorField random_field(Rng& rng, std::size_t dim, unsigned vars, unsigned degree, unsigned terms = 8);

// Realization of operator words on fields of the ambient space R^n.
//   D_T = sum_{i<n} e_i d_i,  D_N = e_n d_n,  iota^* = (x_n := 0).
// Coefficients are evaluated at n := rep.n() and at the given symbol values.
class Realizer {
public:
    explicit Realizer(const CliffordRep& rep) : rep_(rep) {}

    PolySpinorField d_t(const PolySpinorField& f) const;
    PolySpinorField d_n(const PolySpinorField& f) const;
    PolySpinorField restrict(const PolySpinorField& f) const;
    PolySpinorField e_n(const PolySpinorField& f) const;

    PolySpinorField apply(const op::OpMonomial& m, const PolySpinorField& f) const;
    // Throws EvaluationAtPole when a coefficient has a pole at the values.
    PolySpinorField apply(const op::OpPoly& a, const PolySpinorField& f,
                          const std::map<Symbol, GaussianRational>& values = {}) const;

private:
    CliffordRep rep_;
};

// e_i e_j + e_j e_i = -2 eps_i delta_ij.
CheckReport check_defining_relations(const CliffordRep& rep);

// realize(A B) psi = realize(A)(realize(B) psi) on `pairs` seeded random pairs.
CheckReport check_realization_consistency(const CliffordRep& rep, unsigned pairs, unsigned degree,
                                          std::uint64_t seed);

// Worked factorization examples plus both factorization theorems up to
// order_max, specialized at n = rep.n() and applied to `fields` random fields.
CheckReport check_factorization_realizations(const CliffordRep& rep, unsigned order_max, unsigned fields,
                                             unsigned degree, std::uint64_t seed, unsigned jobs);

// The restricted monomials e_n^eps D_T^a iota^* D_N^b, a <= a_max, b <= b_max,
// realize to linearly independent operators on random fields of degree a_max + b_max.
CheckReport check_separating_family(const CliffordRep& rep, unsigned a_max, unsigned b_max, unsigned fields,
                                    std::uint64_t seed);

// P_± = 1/2 (1 - (±i)^(p+1) e_n) with p = rep.p(), computed as written.
std::pair<CMatrix, CMatrix> signature_projectors(const CliffordRep& rep);
// Idempotence, complementarity, sum and the (±i)^(p+1) eigenspace property.
CheckReport check_signature_projectors(const CliffordRep& rep);

struct EigenResult {
    CheckReport report;
    std::vector<std::vector<PolySpinorField>> grades;  // per boundary field, psi_0..psi_K
};

// Flat eigen-recurrence on R^{m+1} (Riemannian), boundary dimension m:
// psi_j = T_j(lambda) P_+ phi must satisfy, for j = 0..K,
//   D_T psi_{j-1} + (lambda + j) e_n psi_j - i lambda psi_j = 0   (psi_{-1} = 0),
// with psi_j in the +i (j even) or -i (j odd) eigenspace of e_n.
// Throws PreconditionViolation for lambda in {-1/2, -3/2, ...} and UsageError for K < 1.
EigenResult eigen_recurrence_check(unsigned boundary_dim, const Rational& lambda, unsigned K, unsigned fields,
                                   unsigned degree, std::uint64_t seed);
// Same recurrence for given boundary fields (components in x_1..x_m).
EigenResult eigen_recurrence_for(const CliffordRep& rep, const Rational& lambda, unsigned K,
                                 const std::vector<PolySpinorField>& boundary_fields);

}  // namespace spinres::clifford
