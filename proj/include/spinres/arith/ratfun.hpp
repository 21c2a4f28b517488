#pragma once

#include "spinres/arith/multipoly.hpp"

#include <map>
#include <string>

namespace spinres {

// num/den in lowest terms with the graded-lex leading coefficient of den
// equal to 1. Polynomials are represented with den = 1.
class RationalFunction {
public:
    RationalFunction() = default;
    RationalFunction(long c) : num_(c) {}                    // NOLINT(google-explicit-constructor)
    RationalFunction(const Rational& c) : num_(c) {}         // NOLINT(google-explicit-constructor)
    RationalFunction(const GaussianRational& c) : num_(c) {} // NOLINT(google-explicit-constructor)
    RationalFunction(MultiPoly p) : num_(std::move(p)) {}    // NOLINT(google-explicit-constructor)
    // Throws DivisionByZero when den is zero.
    RationalFunction(MultiPoly num, MultiPoly den);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    GaussianRational constant_value() const;

    // Throws DivisionByZero for 0.
    RationalFunction inverse() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // Throw EvaluationAtPole when the denominator vanishes.
    RationalFunction substitute(Symbol s, const MultiPoly& value) const;
    RationalFunction substitute(Symbol s, const GaussianRational& value) const;
    GaussianRational evaluate(const std::map<Symbol, GaussianRational>& values) const;

    // Re-runs the reduction; a no-op on any value produced by this class.
    RationalFunction normalized() const { return RationalFunction(num_, den_); }

    std::string to_string() const;
    std::string to_latex() const;

private:
    struct Reduced {};
    RationalFunction(MultiPoly num, MultiPoly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void reduce();

    MultiPoly num_;
    MultiPoly den_{1};
};

RationalFunction pow(const RationalFunction& f, unsigned k);

}  // namespace spinres
