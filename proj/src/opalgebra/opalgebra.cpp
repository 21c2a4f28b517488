#include "spinres/opalgebra/opalgebra.hpp"

#include "spinres/errors.hpp"

namespace spinres::op {

SignedMonomial compose(const OpMonomial& x, const OpMonomial& y) {
    if (x.restricted && y.restricted) throw DomainError("cannot compose two restricted operators");
    if (y.restricted && x.b > 0) throw DomainError("D_N cannot act after the restriction iota^*");
    int sign = 1;
    // e_n^eps2 moves left across D_N^b1 (commutes) and D_T^a1 (anticommutes).
    if (y.eps && (x.a % 2 == 1)) sign = -sign;
    // D_N^b1 D_T^a2 = (-1)^(a2 b1) D_T^a2 D_N^b1.
    if ((x.b % 2 == 1) && (y.a % 2 == 1)) sign = -sign;
    unsigned eps = x.eps + y.eps;
    if (eps == 2) {
        sign = -sign;
        eps = 0;
    }
    return {sign, OpMonomial{eps, x.a + y.a, x.b + y.b, x.restricted || y.restricted}};
}

namespace {

std::string power(const char* base, unsigned k, bool latex) {
    std::string s = base;
    if (k == 1) return s;
    return s + (latex ? "^{" + std::to_string(k) + "}" : "^" + std::to_string(k));
}

std::string monomial_text(const OpMonomial& m, bool latex) {
    std::vector<std::string> parts;
    if (m.eps) parts.emplace_back(latex ? "e_n" : "e_n");
    if (m.a) parts.push_back(power("D_T", m.a, latex));
    if (m.restricted) parts.emplace_back(latex ? "\\iota^*" : "iota*");
    if (m.b) parts.push_back(power("D_N", m.b, latex));
    if (parts.empty()) return latex ? "\\mathrm{Id}" : "1";
    std::string s;
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? " " : "") + parts[k];
    return s;
}

std::string strip_pole_prefix(const std::string& what) {
    static const std::string prefix = "evaluation at pole: ";
    return what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
}

}  // namespace

std::string to_string(const OpMonomial& m) { return monomial_text(m, false); }
std::string to_latex(const OpMonomial& m) { return monomial_text(m, true); }

OpPoly::OpPoly(const OpMonomial& m, RationalFunction c) {
    if (m.eps > 1) throw UsageError("e_n exponent must be 0 or 1");
    add_term(m, c);
}

OpPoly OpPoly::identity() { return OpPoly(OpMonomial{}); }
OpPoly OpPoly::iota() { return OpPoly(OpMonomial{0, 0, 0, true}); }
OpPoly OpPoly::e_n() { return OpPoly(OpMonomial{1, 0, 0, false}); }
OpPoly OpPoly::d_t() { return OpPoly(OpMonomial{0, 1, 0, false}); }
OpPoly OpPoly::d_n() { return OpPoly(OpMonomial{0, 0, 1, false}); }
OpPoly OpPoly::partial_n() { return OpPoly(OpMonomial{1, 0, 1, false}, RationalFunction(-1)); }
OpPoly OpPoly::d_tilde() { return OpPoly(OpMonomial{1, 1, 0, false}); }

RationalFunction OpPoly::coefficient(const OpMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void OpPoly::add_term(const OpMonomial& m, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OpPoly OpPoly::operator-() const {
    OpPoly r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

OpPoly& OpPoly::operator+=(const OpPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

OpPoly& OpPoly::operator-=(const OpPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

OpPoly& OpPoly::operator*=(const RationalFunction& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

OpPoly operator*(const OpPoly& x, const OpPoly& y) {
    OpPoly r;
    for (const auto& [mx, cx] : x.terms_) {
        for (const auto& [my, cy] : y.terms_) {
            auto [sign, m] = compose(mx, my);
            RationalFunction c = cx * cy;
            r.add_term(m, sign > 0 ? c : -c);
        }
    }
    return r;
}

OpPoly pow(const OpPoly& x, unsigned k) {
    OpPoly r = OpPoly::identity();
    for (unsigned i = 0; i < k; ++i) r = r * x;
    return r;
}

OpPoly OpPoly::substitute(Symbol s, const MultiPoly& value) const {
    OpPoly r;
    for (const auto& [m, c] : terms_) {
        try {
            r.add_term(m, c.substitute(s, value));
        } catch (const EvaluationAtPole& e) {
            throw EvaluationAtPole(strip_pole_prefix(e.what()) + " (coefficient of " + op::to_string(m) + ")");
        }
    }
    return r;
}

OpPoly OpPoly::substitute(Symbol s, const GaussianRational& value) const {
    return substitute(s, MultiPoly(value));
}

std::string OpPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.to_string() + ")*" + op::to_string(m);
    }
    return s;
}

std::string OpPoly::to_latex() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const std::string word = op::to_latex(m);
        const GaussianRational lc = c.num().leading_coefficient();
        const bool negative = lc.im() == 0 && lc.re() < 0;
        const RationalFunction shown = negative ? -c : c;
        std::string coeff;
        if (!(shown == RationalFunction(1))) {
            coeff = shown.is_constant() ? shown.to_latex() : "(" + shown.to_latex() + ")";
            coeff += " ";
        }
        if (first) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        first = false;
        s += coeff + word;
    }
    return s;
}

Json OpPoly::to_json() const {
    Json terms = Json::array();
    for (const auto& [m, c] : terms_) {
        Json t;
        t["eps"] = m.eps;
        t["a"] = m.a;
        t["b"] = m.b;
        if (!m.restricted) t["ambient"] = true;
        t["coeff"] = c.to_string();
        terms.push_back(std::move(t));
    }
    return terms;
}

}  // namespace spinres::op
