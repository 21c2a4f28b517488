#include "spinres/gegenbauer/gegenbauer.hpp"

#include "spinres/errors.hpp"

#include <mutex>

namespace spinres::gegenbauer {

namespace {

const MultiPoly& lambda_poly() {
    static const MultiPoly p = MultiPoly::variable(sym::lambda());
    return p;
}

const MultiPoly& n_poly() {
    static const MultiPoly p = MultiPoly::variable(sym::n());
    return p;
}

Rational sign_pow(int k) { return (k % 2 == 0) ? Rational(1) : Rational(-1); }

Rational coefficient_prefactor(int N, int j, unsigned odd_shift) {
    Integer two_pow;
    mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, static_cast<unsigned long>(N - j));
    Rational pref(factorial(N) * two_pow);
    pref /= Rational(factorial(j) * factorial(2 * (N - j) + odd_shift));
    return pref * sign_pow(N - j) * sign_pow(N);
}

MultiPoly linear_product(int N, int j, long offset) {
    MultiPoly prod(1);
    const MultiPoly base = MultiPoly(2) * lambda_poly() + n_poly();
    for (int k = j; k < N; ++k) prod *= base + MultiPoly(offset - 4L * N + 2L * k);
    return prod;
}

void check_range(int N, int j) {
    if (N < 0 || j < 0 || j > N) {
        throw UsageError("Gegenbauer coefficient index out of range: N=" + std::to_string(N) +
                         ", j=" + std::to_string(j));
    }
}

RationalFunction rising(const RationalFunction& a, unsigned l) {
    RationalFunction r(1);
    for (unsigned k = 0; k < l; ++k) r *= a + RationalFunction(static_cast<long>(k));
    return r;
}

}  // namespace

MultiPoly coeff_a(int N, int j) {
    check_range(N, j);
    return MultiPoly(coefficient_prefactor(N, j, 0)) * linear_product(N, j, 1);
}

MultiPoly coeff_b(int N, int j) {
    check_range(N, j);
    return MultiPoly(coefficient_prefactor(N, j, 1)) * linear_product(N, j, -1);
}

MultiPoly shift_lambda(const MultiPoly& p, const Rational& shift) {
    return p.substitute(sym::lambda(), lambda_poly() + MultiPoly(shift));
}

GegenbauerTable::GegenbauerTable(unsigned max_order) : max_order_(max_order) {
    a_.resize(max_order + 1);
    b_.resize(max_order + 1);
    for (int N = 0; N <= static_cast<int>(max_order); ++N) {
        for (int j = 0; j <= N; ++j) {
            a_[N].push_back(coeff_a(N, j));
            b_[N].push_back(coeff_b(N, j));
        }
    }
}

const MultiPoly& GegenbauerTable::a(int N, int j) const {
    check_range(N, j);
    if (N > static_cast<int>(max_order_)) throw UsageError("N exceeds table size");
    return a_[N][j];
}

const MultiPoly& GegenbauerTable::b(int N, int j) const {
    check_range(N, j);
    if (N > static_cast<int>(max_order_)) throw UsageError("N exceeds table size");
    return b_[N][j];
}

MultiPoly GegenbauerTable::a_or_zero(int N, int j) const {
    if (N < 0 || j < 0 || j > N) return {};
    return a(N, j);
}

MultiPoly GegenbauerTable::b_or_zero(int N, int j) const {
    if (N < 0 || j < 0 || j > N) return {};
    return b(N, j);
}

std::shared_ptr<const GegenbauerTable> shared_table(unsigned max_order) {
    static std::mutex mutex;
    static std::shared_ptr<const GegenbauerTable> table;
    std::lock_guard lock(mutex);
    if (!table || table->max_order() < max_order) {
        unsigned size = table ? std::max(max_order, 2 * table->max_order()) : std::max(max_order, 16u);
        table = std::make_shared<const GegenbauerTable>(size);
    }
    return table;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::generating: return "generating";
        case Method::recurrence: return "recurrence";
        case Method::explicit_sum: return "explicit";
        case Method::hypergeometric: return "hypergeometric";
    }
    return "?";
}

std::vector<RationalFunction> GegenbauerPoly::derivative() const {
    std::vector<RationalFunction> out;
    for (std::size_t p = 1; p < coeffs.size(); ++p) out.push_back(coeffs[p] * RationalFunction(static_cast<long>(p)));
    if (out.empty()) out.emplace_back();
    return out;
}

std::vector<GegenbauerPoly> gegenbauer_series(const RationalFunction& alpha, unsigned order) {
    // powers[m][k][p]: coefficient of t^k x^p in (t^2 - 2xt)^m, for k <= order.
    using XPoly = std::vector<Rational>;
    const unsigned K = order;
    std::vector<std::vector<XPoly>> powers(K + 1, std::vector<XPoly>(K + 1));
    powers[0][0] = {Rational(1)};
    for (unsigned m = 1; m <= K; ++m) {
        for (unsigned k = m; k <= K; ++k) {
            XPoly acc(k + 1, Rational(0));
            for (std::size_t p = 0; p < powers[m - 1][k - 1].size(); ++p) acc[p + 1] -= 2 * powers[m - 1][k - 1][p];
            if (k >= 2) {
                for (std::size_t p = 0; p < powers[m - 1][k - 2].size(); ++p) acc[p] += powers[m - 1][k - 2][p];
            }
            powers[m][k] = std::move(acc);
        }
    }
    // binom(-alpha, m) for m = 0..K.
    std::vector<RationalFunction> binom{RationalFunction(1)};
    for (unsigned m = 1; m <= K; ++m) {
        binom.push_back(binom.back() * (-alpha - RationalFunction(static_cast<long>(m - 1))) *
                        RationalFunction(make_rational(1, static_cast<long>(m))));
    }
    std::vector<GegenbauerPoly> out;
    for (unsigned k = 0; k <= K; ++k) {
        GegenbauerPoly c{k, alpha, std::vector<RationalFunction>(k + 1)};
        for (unsigned m = 0; m <= k; ++m) {
            const XPoly& xp = powers[m][k];
            for (std::size_t p = 0; p < xp.size(); ++p) {
                if (sgn(xp[p]) != 0) c.coeffs[p] += binom[m] * RationalFunction(xp[p]);
            }
        }
        out.push_back(std::move(c));
    }
    return out;
}

namespace {

GegenbauerPoly by_recurrence(unsigned k, const RationalFunction& alpha) {
    std::vector<RationalFunction> prev{RationalFunction(1)};
    if (k == 0) return {0, alpha, prev};
    std::vector<RationalFunction> cur{RationalFunction(), RationalFunction(2) * alpha};
    for (unsigned m = 2; m <= k; ++m) {
        const RationalFunction inv_m(make_rational(1, static_cast<long>(m)));
        const RationalFunction up = RationalFunction(2) * (RationalFunction(static_cast<long>(m) - 1) + alpha) * inv_m;
        const RationalFunction down = (RationalFunction(static_cast<long>(m) - 2) + RationalFunction(2) * alpha) * inv_m;
        std::vector<RationalFunction> next(m + 1);
        for (std::size_t p = 0; p < cur.size(); ++p) next[p + 1] += up * cur[p];
        for (std::size_t p = 0; p < prev.size(); ++p) next[p] -= down * prev[p];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {k, alpha, cur};
}

GegenbauerPoly by_explicit_sum(unsigned k, const RationalFunction& alpha) {
    GegenbauerPoly c{k, alpha, std::vector<RationalFunction>(k + 1)};
    for (unsigned m = 0; 2 * m <= k; ++m) {
        const unsigned p = k - 2 * m;
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, p);
        Rational scalar(two_pow);
        scalar /= Rational(factorial(m) * factorial(p));
        if (m % 2 == 1) scalar = -scalar;
        c.coeffs[p] = rising(alpha, k - m) * RationalFunction(scalar);
    }
    return c;
}

GegenbauerPoly by_hypergeometric(unsigned k, const RationalFunction& alpha) {
    const RationalFunction two_alpha = RationalFunction(2) * alpha;
    const RationalFunction half(make_rational(1, 2));
    GegenbauerPoly c{k, alpha, std::vector<RationalFunction>(k + 1)};
    // Terms (-k)_m (2 alpha + k)_m / ((alpha + 1/2)_m m!) ((1 - x)/2)^m.
    RationalFunction term(1);
    for (unsigned m = 0; m <= k; ++m) {
        if (m > 0) {
            RationalFunction lower = alpha + half + RationalFunction(static_cast<long>(m) - 1);
            if (lower.is_zero()) throw DivisionByZero("(alpha+1/2)_m vanishes in the hypergeometric form");
            term *= RationalFunction(-static_cast<long>(k) + static_cast<long>(m) - 1) *
                    (two_alpha + RationalFunction(static_cast<long>(k + m) - 1)) / lower *
                    RationalFunction(make_rational(1, static_cast<long>(m)));
        }
        Integer two_pow;
        mpz_ui_pow_ui(two_pow.get_mpz_t(), 2, m);
        for (unsigned r = 0; r <= m; ++r) {
            Rational binom_coeff(binomial(m, r));
            binom_coeff /= Rational(two_pow);
            if (r % 2 == 1) binom_coeff = -binom_coeff;
            c.coeffs[r] += term * RationalFunction(binom_coeff);
        }
    }
    const RationalFunction scale = rising(two_alpha, k) * RationalFunction(Rational(1) / Rational(factorial(k)));
    for (auto& coeff : c.coeffs) coeff *= scale;
    return c;
}

}  // namespace

GegenbauerPoly gegenbauer_poly(unsigned k, const RationalFunction& alpha, Method method, int expansion_order) {
    switch (method) {
        case Method::generating: {
            const int order = expansion_order < 0 ? static_cast<int>(k) : expansion_order;
            if (order < static_cast<int>(k)) {
                throw UsageError("generating-function expansion order " + std::to_string(order) +
                                 " is below the requested degree " + std::to_string(k));
            }
            return gegenbauer_series(alpha, static_cast<unsigned>(order))[k];
        }
        case Method::recurrence: return by_recurrence(k, alpha);
        case Method::explicit_sum: return by_explicit_sum(k, alpha);
        case Method::hypergeometric: return by_hypergeometric(k, alpha);
    }
    throw UsageError("unknown Gegenbauer construction method");
}

}  // namespace spinres::gegenbauer
