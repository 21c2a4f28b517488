#pragma once

#include "spinres/arith/gaussian.hpp"
#include "spinres/arith/symbol.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spinres {

using Exponents = std::vector<std::uint32_t>;

// Graded-lex, greatest first: higher total degree wins, ties broken
// lexicographically with the first symbol most significant.
struct GradedLexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse multivariate polynomial with Gaussian-rational coefficients.
//
// The symbol list is kept sorted by the global symbol order and trimmed to
// the symbols that actually occur, so two equal polynomials always have
// identical data. Terms iterate from the graded-lex leading term downwards.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexGreater>;

    MultiPoly() = default;
    MultiPoly(long c);                // NOLINT(google-explicit-constructor)
    MultiPoly(const Rational& c);     // NOLINT(google-explicit-constructor)
    MultiPoly(GaussianRational c);    // NOLINT(google-explicit-constructor)

    static MultiPoly variable(Symbol s);
    static MultiPoly monomial(Symbol s, std::uint32_t exponent, GaussianRational c = 1);
    // Throws UsageError when the symbols are not strictly increasing or an
    // exponent vector has the wrong arity.
    static MultiPoly from_terms(std::vector<Symbol> symbols,
                                const std::vector<std::pair<Exponents, GaussianRational>>& terms);

    const std::vector<Symbol>& symbols() const { return symbols_; }
    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return symbols_.empty(); }
    bool is_real() const;
    // Throws UsageError when not constant.
    GaussianRational constant_value() const;

    unsigned total_degree() const;
    unsigned degree(Symbol s) const;
    // Leading coefficient under graded-lex; zero for the zero polynomial.
    GaussianRational leading_coefficient() const;

    // Coefficient of s^k, as a polynomial in the remaining symbols.
    MultiPoly coefficient(Symbol s, unsigned k) const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const GaussianRational& c);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.symbols_ == b.symbols_ && a.terms_ == b.terms_;
    }

    MultiPoly pow(unsigned k) const;
    MultiPoly derivative(Symbol s) const;

    MultiPoly substitute(Symbol s, const MultiPoly& value) const;
    MultiPoly substitute(Symbol s, const GaussianRational& value) const;
    // Throws UsageError when a symbol of the polynomial has no value.
    GaussianRational evaluate(const std::map<Symbol, GaussianRational>& values) const;

    // Same polynomial written over a superset of its symbols; the result is
    // not trimmed and is meant for internal alignment only.
    TermMap terms_over(const std::vector<Symbol>& superset) const;

    std::string to_string() const;
    std::string to_latex() const;

private:
    friend class PolyKernel;
    MultiPoly(std::vector<Symbol> symbols, TermMap terms);
    void normalize();

    std::vector<Symbol> symbols_;
    TermMap terms_;
};

// (a)_l = a (a+1) ... (a+l-1).
MultiPoly pochhammer(const MultiPoly& a, unsigned l);

// q with a = q*b if it exists. Throws DivisionByZero for b = 0.
std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b);

// Greatest common divisor normalized to leading coefficient 1 (gcd(0,0) = 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

// Distinct rational roots of a univariate polynomial with rational
// coefficients, each with its multiplicity, in increasing order.
std::vector<std::pair<Rational, unsigned>> rational_roots(const MultiPoly& p, Symbol s);

}  // namespace spinres
