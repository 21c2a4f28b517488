#include "spinres/arith/multipoly.hpp"

#include "spinres/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace spinres {

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
}

// Raw term-map arithmetic over a fixed symbol list. Used by the ring
// operations once operands are aligned, and by the gcd / division code.
class PolyKernel {
public:
    using TermMap = MultiPoly::TermMap;

    static void accumulate(TermMap& into, const Exponents& e, const GaussianRational& c) {
        auto [it, inserted] = into.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) into.erase(it);
        }
    }

    static void add(TermMap& into, const TermMap& other, bool negate) {
        for (const auto& [e, c] : other) accumulate(into, e, negate ? -c : c);
    }

    static TermMap mul(const TermMap& a, const TermMap& b) {
        TermMap out;
        if (a.empty() || b.empty()) return out;
        Exponents e(a.begin()->first.size());
        for (const auto& [ea, ca] : a) {
            for (const auto& [eb, cb] : b) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                accumulate(out, e, ca * cb);
            }
        }
        return out;
    }

    static TermMap one(std::size_t arity) {
        TermMap m;
        m.emplace(Exponents(arity, 0), GaussianRational(1));
        return m;
    }

    static bool is_constant(const TermMap& p) {
        if (p.size() != 1) return false;
        const auto& e = p.begin()->first;
        return std::all_of(e.begin(), e.end(), [](auto x) { return x == 0; });
    }

    static unsigned degree_in(const TermMap& p, std::size_t v) {
        unsigned d = 0;
        for (const auto& [e, c] : p) d = std::max<unsigned>(d, e[v]);
        return d;
    }

    static TermMap coefficient_in(const TermMap& p, std::size_t v, unsigned k) {
        TermMap out;
        for (const auto& [e, c] : p) {
            if (e[v] != k) continue;
            Exponents f = e;
            f[v] = 0;
            out.emplace(std::move(f), c);
        }
        return out;
    }

    static TermMap shift(const TermMap& p, std::size_t v, unsigned k) {
        if (k == 0) return p;
        TermMap out;
        for (const auto& [e, c] : p) {
            Exponents f = e;
            f[v] += k;
            out.emplace(std::move(f), c);
        }
        return out;
    }

    static TermMap monic(TermMap p) {
        if (p.empty()) return p;
        GaussianRational inv = p.begin()->second.inverse();
        if (inv.is_one()) return p;
        for (auto& [e, c] : p) c *= inv;
        return p;
    }

    static std::optional<TermMap> divide(TermMap r, const TermMap& b) {
        if (b.empty()) throw DivisionByZero("polynomial division by zero");
        const auto& [lb_e, lb_c] = *b.begin();
        const GaussianRational lb_inv = lb_c.inverse();
        const std::size_t nv = lb_e.size();
        TermMap q;
        Exponents d(nv), e(nv);
        while (!r.empty()) {
            const auto& [re, rc] = *r.begin();
            for (std::size_t i = 0; i < nv; ++i) {
                if (re[i] < lb_e[i]) return std::nullopt;
                d[i] = re[i] - lb_e[i];
            }
            GaussianRational c = rc * lb_inv;
            q.emplace(d, c);
            for (const auto& [be, bc] : b) {
                for (std::size_t i = 0; i < nv; ++i) e[i] = be[i] + d[i];
                accumulate(r, e, -(c * bc));
            }
        }
        return q;
    }

    static TermMap divide_exact(const TermMap& a, const TermMap& b) {
        auto q = divide(a, b);
        if (!q) throw std::logic_error("internal: expected exact polynomial division");
        return std::move(*q);
    }

    static TermMap content_in(const TermMap& p, std::size_t v, std::size_t arity) {
        std::map<unsigned, TermMap> by_degree;
        for (const auto& [e, c] : p) {
            Exponents f = e;
            f[v] = 0;
            by_degree[e[v]].emplace(std::move(f), c);
        }
        TermMap g;
        for (const auto& [k, coeff] : by_degree) {
            g = gcd(g, coeff, arity);
            if (is_constant(g)) return one(arity);
        }
        return g;
    }

    // Also scaled to leading coefficient 1, which keeps the rational
    // coefficients of the remainder sequence from growing.
    static TermMap primitive_in(const TermMap& p, std::size_t v, std::size_t arity) {
        return monic(divide_exact(p, content_in(p, v, arity)));
    }

    static TermMap pseudo_remainder(const TermMap& a, const TermMap& b, std::size_t v) {
        const unsigned db = degree_in(b, v);
        const TermMap lb = coefficient_in(b, v, db);
        TermMap r = a;
        while (!r.empty()) {
            unsigned dr = degree_in(r, v);
            if (dr < db) break;
            TermMap lr = coefficient_in(r, v, dr);
            TermMap next = mul(lb, r);
            add(next, mul(lr, shift(b, v, dr - db)), true);
            r = std::move(next);
        }
        return r;
    }

    // Recursive primitive PRS. Every nonzero constant is a unit, so the
    // content of a univariate polynomial is 1.
    static TermMap gcd(const TermMap& a, const TermMap& b, std::size_t arity) {
        if (a.empty()) return monic(b);
        if (b.empty()) return monic(a);
        if (is_constant(a) || is_constant(b)) return one(arity);

        std::size_t v = arity;
        for (std::size_t i = 0; i < arity && v == arity; ++i) {
            if (degree_in(a, i) > 0 || degree_in(b, i) > 0) v = i;
        }
        const unsigned da = degree_in(a, v), db = degree_in(b, v);
        if (da == 0) return gcd(a, content_in(b, v, arity), arity);
        if (db == 0) return gcd(content_in(a, v, arity), b, arity);

        TermMap ca = content_in(a, v, arity), cb = content_in(b, v, arity);
        TermMap pa = monic(divide_exact(a, ca)), pb = monic(divide_exact(b, cb));
        TermMap g = gcd(ca, cb, arity);
        if (da < db) std::swap(pa, pb);
        while (true) {
            TermMap r = pseudo_remainder(pa, pb, v);
            if (r.empty()) break;
            if (degree_in(r, v) == 0) return monic(g);
            pa = std::move(pb);
            pb = primitive_in(r, v, arity);
        }
        return monic(mul(g, primitive_in(pb, v, arity)));
    }

    static MultiPoly wrap(std::vector<Symbol> symbols, TermMap terms) {
        return MultiPoly(std::move(symbols), std::move(terms));
    }
};

namespace {

std::vector<Symbol> merge_symbols(const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    std::vector<Symbol> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::optional<std::size_t> index_of(const std::vector<Symbol>& symbols, Symbol s) {
    auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
    if (it == symbols.end() || *it != s) return std::nullopt;
    return static_cast<std::size_t>(it - symbols.begin());
}

}  // namespace

MultiPoly::MultiPoly(long c) : MultiPoly(GaussianRational(c)) {}
MultiPoly::MultiPoly(const Rational& c) : MultiPoly(GaussianRational(c)) {}
MultiPoly::MultiPoly(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Exponents{}, std::move(c));
}

MultiPoly::MultiPoly(std::vector<Symbol> symbols, TermMap terms)
    : symbols_(std::move(symbols)), terms_(std::move(terms)) {
    normalize();
}

MultiPoly MultiPoly::variable(Symbol s) { return monomial(s, 1); }

MultiPoly MultiPoly::monomial(Symbol s, std::uint32_t exponent, GaussianRational c) {
    TermMap t;
    t.emplace(Exponents{exponent}, std::move(c));
    return MultiPoly({s}, std::move(t));
}

MultiPoly MultiPoly::from_terms(std::vector<Symbol> symbols,
                                const std::vector<std::pair<Exponents, GaussianRational>>& terms) {
    for (std::size_t i = 1; i < symbols.size(); ++i) {
        if (!(symbols[i - 1] < symbols[i])) throw UsageError("symbol list must be strictly increasing");
    }
    TermMap t;
    for (const auto& [e, c] : terms) {
        if (e.size() != symbols.size()) throw UsageError("exponent vector arity does not match symbol list");
        PolyKernel::accumulate(t, e, c);
    }
    return MultiPoly(std::move(symbols), std::move(t));
}

void MultiPoly::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    if (symbols_.empty()) return;
    std::vector<bool> used(symbols_.size(), false);
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] != 0;
    }
    if (std::all_of(used.begin(), used.end(), [](bool u) { return u; })) return;
    std::vector<Symbol> kept;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        if (used[i]) kept.push_back(symbols_[i]);
    }
    // Dropping all-zero columns preserves the graded-lex order.
    TermMap trimmed;
    for (auto& [e, c] : terms_) {
        Exponents f;
        f.reserve(kept.size());
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (used[i]) f.push_back(e[i]);
        }
        trimmed.emplace_hint(trimmed.end(), std::move(f), std::move(c));
    }
    symbols_ = std::move(kept);
    terms_ = std::move(trimmed);
}

MultiPoly::TermMap MultiPoly::terms_over(const std::vector<Symbol>& superset) const {
    if (superset == symbols_) return terms_;
    std::vector<std::size_t> pos(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto k = index_of(superset, symbols_[i]);
        if (!k) throw UsageError("symbol '" + symbols_[i].name() + "' missing from target symbol list");
        pos[i] = *k;
    }
    TermMap out;
    for (const auto& [e, c] : terms_) {
        Exponents f(superset.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) f[pos[i]] = e[i];
        out.emplace(std::move(f), c);
    }
    return out;
}

bool MultiPoly::is_real() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_real(); });
}

GaussianRational MultiPoly::constant_value() const {
    if (!is_constant()) throw UsageError("polynomial is not constant: " + to_string());
    return terms_.empty() ? GaussianRational(0) : terms_.begin()->second;
}

unsigned MultiPoly::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, std::accumulate(e.begin(), e.end(), 0u));
    return d;
}

unsigned MultiPoly::degree(Symbol s) const {
    auto k = index_of(symbols_, s);
    return k ? PolyKernel::degree_in(terms_, *k) : 0;
}

GaussianRational MultiPoly::leading_coefficient() const {
    return terms_.empty() ? GaussianRational(0) : terms_.begin()->second;
}

MultiPoly MultiPoly::coefficient(Symbol s, unsigned k) const {
    auto v = index_of(symbols_, s);
    if (!v) return k == 0 ? *this : MultiPoly();
    return MultiPoly(symbols_, PolyKernel::coefficient_in(terms_, *v, k));
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.is_zero()) return *this;
    if (symbols_ != o.symbols_) {
        auto merged = merge_symbols(symbols_, o.symbols_);
        terms_ = terms_over(merged);
        symbols_ = std::move(merged);
        PolyKernel::add(terms_, o.terms_over(symbols_), false);
    } else {
        PolyKernel::add(terms_, o.terms_, false);
    }
    normalize();
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.is_zero()) return *this;
    if (symbols_ != o.symbols_) {
        auto merged = merge_symbols(symbols_, o.symbols_);
        terms_ = terms_over(merged);
        symbols_ = std::move(merged);
        PolyKernel::add(terms_, o.terms_over(symbols_), true);
    } else {
        PolyKernel::add(terms_, o.terms_, true);
    }
    normalize();
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_constant()) {
        MultiPoly r = b;
        return r *= a.terms_.begin()->second;
    }
    if (b.is_constant()) {
        MultiPoly r = a;
        return r *= b.terms_.begin()->second;
    }
    if (a.symbols_ == b.symbols_) return MultiPoly(a.symbols_, PolyKernel::mul(a.terms_, b.terms_));
    auto merged = merge_symbols(a.symbols_, b.symbols_);
    auto product = PolyKernel::mul(a.terms_over(merged), b.terms_over(merged));
    return MultiPoly(std::move(merged), std::move(product));
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const GaussianRational& c) {
    if (c.is_zero()) {
        terms_.clear();
        symbols_.clear();
        return *this;
    }
    if (c.is_one()) return *this;
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::pow(unsigned k) const {
    MultiPoly r(1), b = *this;
    while (k) {
        if (k & 1u) r *= b;
        k >>= 1u;
        if (k) b *= b;
    }
    return r;
}

MultiPoly MultiPoly::derivative(Symbol s) const {
    auto v = index_of(symbols_, s);
    if (!v) return {};
    TermMap out;
    for (const auto& [e, c] : terms_) {
        if (e[*v] == 0) continue;
        Exponents f = e;
        --f[*v];
        PolyKernel::accumulate(out, f, c * GaussianRational(static_cast<long>(e[*v])));
    }
    return MultiPoly(symbols_, std::move(out));
}

MultiPoly MultiPoly::substitute(Symbol s, const MultiPoly& value) const {
    auto v = index_of(symbols_, s);
    if (!v) return *this;
    if (value.is_constant()) return substitute(s, value.constant_value());
    std::map<unsigned, TermMap> by_degree;
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[*v] = 0;
        by_degree[e[*v]].emplace(std::move(f), c);
    }
    MultiPoly result, power(1);
    unsigned at = 0;
    for (auto& [k, coeff] : by_degree) {
        while (at < k) {
            power *= value;
            ++at;
        }
        result += MultiPoly(symbols_, std::move(coeff)) * power;
    }
    return result;
}

MultiPoly MultiPoly::substitute(Symbol s, const GaussianRational& value) const {
    auto v = index_of(symbols_, s);
    if (!v) return *this;
    std::vector<GaussianRational> powers{GaussianRational(1)};
    TermMap out;
    for (const auto& [e, c] : terms_) {
        while (powers.size() <= e[*v]) powers.push_back(powers.back() * value);
        Exponents f = e;
        f[*v] = 0;
        PolyKernel::accumulate(out, f, c * powers[e[*v]]);
    }
    return MultiPoly(symbols_, std::move(out));
}

GaussianRational MultiPoly::evaluate(const std::map<Symbol, GaussianRational>& values) const {
    std::vector<const GaussianRational*> at(symbols_.size());
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        auto it = values.find(symbols_[i]);
        if (it == values.end()) throw UsageError("no value for symbol '" + symbols_[i].name() + "'");
        at[i] = &it->second;
    }
    GaussianRational sum;
    for (const auto& [e, c] : terms_) {
        GaussianRational term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i]) term *= spinres::pow(*at[i], e[i]);
        }
        sum += term;
    }
    return sum;
}

namespace {

std::string monomial_text(const std::vector<Symbol>& symbols, const Exponents& e, bool latex) {
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!out.empty() && !latex) out += "*";
        out += latex ? symbols[i].latex() : symbols[i].name();
        if (e[i] > 1) out += latex ? "^{" + std::to_string(e[i]) + "}" : "^" + std::to_string(e[i]);
    }
    return out;
}

std::string rational_latex(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() + "}";
}

std::string poly_text(const std::vector<Symbol>& symbols, const MultiPoly::TermMap& terms, bool latex) {
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string mono = monomial_text(symbols, e, latex);
        std::string coeff;
        bool negative = false;
        if (c.is_real()) {
            negative = sgn(c.re()) < 0;
            Rational mag = abs(c.re());
            if (!(mag == 1 && !mono.empty())) coeff = latex ? rational_latex(mag) : to_string(mag);
        } else if (latex) {
            std::string re = sgn(c.re()) != 0 ? rational_latex(c.re()) : "";
            std::string im = c.im() == 1 ? "i" : c.im() == -1 ? "-i" : rational_latex(c.im()) + "i";
            if (!re.empty() && sgn(c.im()) > 0) im = "+" + im;
            coeff = "(" + re + im + ")";
        } else {
            coeff = "(" + c.to_string() + ")";
        }
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? "-" : "+";
        }
        out += coeff;
        if (!coeff.empty() && !mono.empty() && !latex) out += "*";
        out += mono;
        first = false;
    }
    return out;
}

}  // namespace

std::string MultiPoly::to_string() const { return poly_text(symbols_, terms_, false); }
std::string MultiPoly::to_latex() const { return poly_text(symbols_, terms_, true); }

MultiPoly pochhammer(const MultiPoly& a, unsigned l) {
    MultiPoly r(1);
    for (unsigned k = 0; k < l; ++k) r *= a + MultiPoly(static_cast<long>(k));
    return r;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& a, const MultiPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return MultiPoly();
    if (b.is_constant()) return a * b.constant_value().inverse();
    auto merged = merge_symbols(a.symbols(), b.symbols());
    auto q = PolyKernel::divide(a.terms_over(merged), b.terms_over(merged));
    if (!q) return std::nullopt;
    return PolyKernel::wrap(std::move(merged), std::move(*q));
}

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return b * b.leading_coefficient().inverse();
    if (b.is_zero()) return a * a.leading_coefficient().inverse();
    if (a.is_constant() || b.is_constant()) return MultiPoly(1);
    auto merged = merge_symbols(a.symbols(), b.symbols());
    const std::size_t arity = merged.size();
    auto g = PolyKernel::gcd(a.terms_over(merged), b.terms_over(merged), arity);
    return PolyKernel::wrap(std::move(merged), std::move(g));
}

namespace {

std::vector<Integer> divisors(Integer m) {
    m = abs(m);
    std::vector<std::pair<Integer, unsigned>> factors;
    for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        unsigned k = 0;
        while (m % p == 0) {
            m /= p;
            ++k;
        }
        if (k) factors.emplace_back(p, k);
    }
    if (m > 1) factors.emplace_back(m, 1);
    std::vector<Integer> out{Integer(1)};
    for (const auto& [p, k] : factors) {
        std::size_t base = out.size();
        Integer pk = 1;
        for (unsigned i = 1; i <= k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
        }
    }
    return out;
}

}  // namespace

std::vector<std::pair<Rational, unsigned>> rational_roots(const MultiPoly& p, Symbol s) {
    if (p.is_zero()) throw UsageError("rational_roots of the zero polynomial");
    for (Symbol t : p.symbols()) {
        if (t != s) throw UsageError("rational_roots expects a univariate polynomial in '" + s.name() + "'");
    }
    if (!p.is_real()) throw UsageError("rational_roots expects rational coefficients");
    std::vector<std::pair<Rational, unsigned>> roots;
    if (p.is_constant()) return roots;

    // Dense integer coefficient list, lowest degree first.
    const unsigned deg = p.degree(s);
    std::vector<Rational> dense(deg + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) dense[e[0]] = c.re();
    unsigned zero_mult = 0;
    while (sgn(dense[zero_mult]) == 0) ++zero_mult;
    if (zero_mult) roots.emplace_back(Rational(0), zero_mult);
    Integer lcm_den = 1;
    for (const auto& c : dense) lcm_den = lcm(lcm_den, Integer(c.get_den()));
    Integer a0 = Integer(dense[zero_mult] * lcm_den);
    Integer an = Integer(dense[deg] * lcm_den);

    MultiPoly rest = p;
    const MultiPoly x = MultiPoly::variable(s);
    if (zero_mult) rest = *exact_divide(rest, x.pow(zero_mult));
    if (deg > zero_mult) {
        std::vector<Rational> candidates;
        auto da = divisors(a0), dn = divisors(an);
        for (const auto& num : da) {
            for (const auto& den : dn) {
                Rational q = make_rational(num, den);
                candidates.push_back(q);
                candidates.push_back(-q);
            }
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& q : candidates) {
            if (rest.is_constant()) break;
            unsigned mult = 0;
            const MultiPoly factor = x - MultiPoly(q);
            while (!rest.is_constant() && rest.substitute(s, GaussianRational(q)).is_zero()) {
                rest = *exact_divide(rest, factor);
                ++mult;
            }
            if (mult) roots.emplace_back(q, mult);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

}  // namespace spinres
