#include "spinres/arith/ratfun.hpp"

#include "spinres/errors.hpp"

namespace spinres {

namespace {

MultiPoly divide_known(const MultiPoly& a, const MultiPoly& b) {
    auto q = exact_divide(a, b);
    if (!q) throw std::logic_error("internal: gcd does not divide operand");
    return std::move(*q);
}

}  // namespace

RationalFunction::RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    reduce();
}

void RationalFunction::reduce() {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly(1);
        return;
    }
    if (den_.is_constant()) {
        GaussianRational c = den_.constant_value();
        if (!c.is_one()) num_ *= c.inverse();
        den_ = MultiPoly(1);
        return;
    }
    if (!num_.is_constant()) {
        MultiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_known(num_, g);
            den_ = divide_known(den_, g);
        }
    }
    GaussianRational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

GaussianRational RationalFunction::constant_value() const {
    if (!is_constant()) throw UsageError("rational function is not constant: " + to_string());
    return num_.constant_value();
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    RationalFunction r(den_, num_, Reduced{});
    GaussianRational lc = r.den_.leading_coefficient();
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        r.num_ *= inv;
        r.den_ *= inv;
    }
    if (r.den_.is_constant()) r.den_ = MultiPoly(1);
    return r;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Reduced{}); }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (is_polynomial() && o.is_polynomial()) {
        num_ += o.num_;
        return *this;
    }
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    MultiPoly g = gcd(den_, o.den_);
    MultiPoly b = divide_known(den_, g), d = divide_known(o.den_, g);
    num_ = num_ * d + o.num_ * b;
    den_ = den_ * d;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    if (is_polynomial() && o.is_polynomial()) {
        num_ *= o.num_;
        return *this;
    }
    MultiPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
    MultiPoly num = divide_known(num_, g1) * divide_known(o.num_, g2);
    MultiPoly den = divide_known(den_, g2) * divide_known(o.den_, g1);
    num_ = std::move(num);
    den_ = std::move(den);
    GaussianRational lc = den_.leading_coefficient();
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::substitute(Symbol s, const MultiPoly& value) const {
    if (is_polynomial()) return RationalFunction(num_.substitute(s, value));
    MultiPoly d = den_.substitute(s, value);
    if (d.is_zero()) {
        throw EvaluationAtPole(s.name() + " := " + value.to_string() + " in " + to_string());
    }
    return RationalFunction(num_.substitute(s, value), std::move(d));
}

RationalFunction RationalFunction::substitute(Symbol s, const GaussianRational& value) const {
    if (is_polynomial()) return RationalFunction(num_.substitute(s, value));
    MultiPoly d = den_.substitute(s, value);
    if (d.is_zero()) {
        throw EvaluationAtPole(s.name() + " := " + value.to_string() + " in " + to_string());
    }
    return RationalFunction(num_.substitute(s, value), std::move(d));
}

GaussianRational RationalFunction::evaluate(const std::map<Symbol, GaussianRational>& values) const {
    GaussianRational d = den_.evaluate(values);
    if (d.is_zero()) throw EvaluationAtPole(to_string());
    return num_.evaluate(values) / d;
}

std::string RationalFunction::to_string() const {
    if (is_polynomial()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RationalFunction::to_latex() const {
    if (is_polynomial()) return num_.to_latex();
    return "\\frac{" + num_.to_latex() + "}{" + den_.to_latex() + "}";
}

RationalFunction pow(const RationalFunction& f, unsigned k) {
    RationalFunction r(1), b = f;
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k) b *= b;
    }
    return r;
}

}  // namespace spinres
