#pragma once

#include "spinres/arith/ratfun.hpp"
#include "spinres/arith/serialize.hpp"

#include <map>
#include <string>

namespace spinres::op {

// e_n^eps D_T^a [iota^*] D_N^b. Ambient words (restricted = false) have no
// iota^*; restricted words carry it between the D_T and D_N blocks.
struct OpMonomial {
    unsigned eps = 0;  // 0 or 1
    unsigned a = 0;
    unsigned b = 0;
    bool restricted = false;

    unsigned order() const { return a + b; }

    friend auto operator<=>(const OpMonomial&, const OpMonomial&) = default;
};

struct SignedMonomial {
    int sign;  // +1 or -1
    OpMonomial mono;
};

// Normal-ordered product x∘y (y acts first). Throws DomainError when both
// carry iota^*, or when x contains D_N and y is restricted.
SignedMonomial compose(const OpMonomial& x, const OpMonomial& y);

std::string to_string(const OpMonomial& m);
std::string to_latex(const OpMonomial& m);

class OpPoly {
public:
    using TermMap = std::map<OpMonomial, RationalFunction>;

    OpPoly() = default;
    OpPoly(const OpMonomial& m, RationalFunction c = RationalFunction(1));

    // Generators.
    static OpPoly identity();  // ambient 1
    static OpPoly iota();      // iota^*
    static OpPoly e_n();
    static OpPoly d_t();
    static OpPoly d_n();
    static OpPoly partial_n();  // -e_n D_N
    static OpPoly d_tilde();    // e_n D_T

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // Zero when absent.
    RationalFunction coefficient(const OpMonomial& m) const;

    OpPoly operator-() const;
    OpPoly& operator+=(const OpPoly& o);
    OpPoly& operator-=(const OpPoly& o);
    OpPoly& operator*=(const RationalFunction& c);
    friend OpPoly operator+(OpPoly x, const OpPoly& y) { return x += y; }
    friend OpPoly operator-(OpPoly x, const OpPoly& y) { return x -= y; }
    friend OpPoly operator*(OpPoly x, const RationalFunction& c) { return x *= c; }
    friend OpPoly operator*(const RationalFunction& c, OpPoly x) { return x *= c; }
    // Composition: (x * y) applies y first.
    friend OpPoly operator*(const OpPoly& x, const OpPoly& y);

    friend bool operator==(const OpPoly&, const OpPoly&) = default;

    // Throws EvaluationAtPole naming the offending monomial.
    OpPoly substitute(Symbol s, const MultiPoly& value) const;
    OpPoly substitute(Symbol s, const GaussianRational& value) const;

    std::string to_string() const;
    // Terms in (eps, a, b) order.
    std::string to_latex() const;
    Json to_json() const;

private:
    void add_term(const OpMonomial& m, const RationalFunction& c);
    TermMap terms_;
};

OpPoly pow(const OpPoly& x, unsigned k);

}  // namespace spinres::op
