#include "spinres/gegenbauer/identities.hpp"

#include "spinres/errors.hpp"
#include "spinres/random.hpp"

namespace spinres::gegenbauer {

namespace {

const MultiPoly& L() {
    static const MultiPoly p = MultiPoly::variable(sym::lambda());
    return p;
}
const MultiPoly& Nsym() {
    static const MultiPoly p = MultiPoly::variable(sym::n());
    return p;
}
const MultiPoly& T() {
    static const MultiPoly p = MultiPoly::variable(sym::t());
    return p;
}

MultiPoly c(long v) { return MultiPoly(v); }

std::string key_nj(int N, int j) { return "N=" + std::to_string(N) + ",j=" + std::to_string(j); }

std::string residual_text(const MultiPoly& residual) { return "residual " + residual.to_string(); }

// C_k^alpha for formal alpha, k = 0..max_k, by the three-term recurrence.
std::vector<GegenbauerPoly> formal_family(unsigned max_k) {
    const RationalFunction alpha(MultiPoly::variable(sym::alpha()));
    std::vector<GegenbauerPoly> out;
    for (unsigned k = 0; k <= max_k; ++k) out.push_back(gegenbauer_poly(k, alpha, Method::recurrence));
    return out;
}

RationalFunction rising_rf(const RationalFunction& a, unsigned l) {
    RationalFunction r(1);
    for (unsigned k = 0; k < l; ++k) r *= a + RationalFunction(static_cast<long>(k));
    return r;
}

}  // namespace

std::vector<CheckReport> check_coeff_recurrences(unsigned n_max) {
    if (n_max < 1) throw UsageError("check_coeff_recurrences needs N_max >= 1");
    auto table = shared_table(n_max);
    CheckReport ra{"a-recurrence"}, rb{"b-recurrence"};
    std::size_t printed_holds = 0, printed_total = 0;
    const MultiPoly two_l_n = c(2) * L() + Nsym();
    for (int N = 1; N <= static_cast<int>(n_max); ++N) {
        for (int j = 1; j <= N; ++j) {
            MultiPoly res_a = c((N - j + 1L) * (2L * N - 2L * j + 1)) * table->a(N, j - 1) +
                              c(j) * (two_l_n + c(-4L * N + 2L * j - 1)) * table->a(N, j);
            ra.record(key_nj(N, j), res_a.is_zero(), [&] { return residual_text(res_a); });

            const MultiPoly tail = c(j) * (two_l_n + c(-4L * N + 2L * j - 3)) * table->b(N, j);
            MultiPoly res_b = c((N - j + 1L) * (2L * N - 2L * j + 3)) * table->b(N, j - 1) + tail;
            rb.record(key_nj(N, j), res_b.is_zero(), [&] { return residual_text(res_b); });

            MultiPoly printed = c(N - j + 1L) * (c(2) * Nsym() + c(-2L * j + 3)) * table->b(N, j - 1) + tail;
            ++printed_total;
            if (printed.is_zero()) ++printed_holds;
        }
    }
    rb.info["lowercase_n_variant_holds"] = printed_holds;
    rb.info["lowercase_n_variant_instances"] = printed_total;
    return {ra, rb};
}

std::vector<CheckReport> check_table_vs_gegenbauer(unsigned n_max) {
    auto table = shared_table(n_max);
    const auto family = formal_family(2 * n_max + 1);
    const RationalFunction alpha(MultiPoly::variable(sym::alpha()));
    // alpha = -lambda - (n-1)/2
    const MultiPoly alpha_value = -L() - MultiPoly(make_rational(1, 2)) * Nsym() + MultiPoly(make_rational(1, 2));
    CheckReport even{"table-vs-gegenbauer-even"}, odd{"table-vs-gegenbauer-odd"};

    auto specialize = [&](const RationalFunction& f, std::string& why) -> std::optional<MultiPoly> {
        if (!f.is_polynomial()) {
            why = "left side not polynomial in alpha: " + f.to_string();
            return std::nullopt;
        }
        return f.num().substitute(sym::alpha(), alpha_value);
    };

    for (int N = 0; N <= static_cast<int>(n_max); ++N) {
        const RationalFunction sign_fact(Rational(factorial(N)) * (N % 2 == 0 ? 1 : -1));
        const RationalFunction even_scale = sign_fact / rising_rf(alpha, N);
        const RationalFunction odd_scale = sign_fact / (RationalFunction(2) * rising_rf(alpha, N + 1));
        for (int j = 0; j <= N; ++j) {
            const MultiPoly sign_j(j % 2 == 0 ? 1L : -1L);
            std::string why;
            auto lhs = specialize(even_scale * family[2 * N].coeffs[2 * N - 2 * j], why);
            bool ok = lhs && *lhs == sign_j * table->a(N, j);
            even.record(key_nj(N, j), ok, [&] { return lhs ? residual_text(*lhs - sign_j * table->a(N, j)) : why; });

            lhs = specialize(odd_scale * family[2 * N + 1].coeffs[2 * N + 1 - 2 * j], why);
            ok = lhs && *lhs == sign_j * table->b(N, j);
            odd.record(key_nj(N, j), ok, [&] { return lhs ? residual_text(*lhs - sign_j * table->b(N, j)) : why; });
        }
    }
    return {even, odd};
}

CheckReport check_cross_construction(unsigned max_degree) {
    const RationalFunction alpha(MultiPoly::variable(sym::alpha()));
    const auto series = gegenbauer_series(alpha, max_degree);
    CheckReport report{"cross-construction"};
    std::size_t parity_violations = 0;
    for (unsigned k = 0; k <= max_degree; ++k) {
        const GegenbauerPoly reference = gegenbauer_poly(k, alpha, Method::recurrence);
        for (std::size_t p = 0; p < reference.coeffs.size(); ++p) {
            if ((p % 2) != (k % 2) && !reference.coeffs[p].is_zero()) ++parity_violations;
        }
        const std::pair<const char*, GegenbauerPoly> others[] = {
            {"generating", series[k]},
            {"explicit", gegenbauer_poly(k, alpha, Method::explicit_sum)},
            {"hypergeometric", gegenbauer_poly(k, alpha, Method::hypergeometric)},
        };
        for (const auto& [name, poly] : others) {
            report.record("k=" + std::to_string(k) + ",method=" + name, poly == reference,
                          [&] { return std::string("differs from recurrence construction"); });
        }
    }
    report.info["max_degree"] = max_degree;
    report.info["parity_violations"] = parity_violations;
    if (parity_violations) report.failures.push_back({"parity", "odd/even monomials mixed"});
    return report;
}

CheckReport check_derivative_identity(unsigned max_degree) {
    const RationalFunction alpha(MultiPoly::variable(sym::alpha()));
    const RationalFunction alpha1 = alpha + RationalFunction(1);
    CheckReport report{"derivative-identity"};
    for (unsigned N = 1; 2 * N <= max_degree; ++N) {
        auto lhs = gegenbauer_poly(2 * N, alpha, Method::recurrence).derivative();
        auto rhs = gegenbauer_poly(2 * N - 1, alpha1, Method::recurrence).coeffs;
        for (auto& coeff : rhs) coeff *= RationalFunction(2) * alpha;
        report.record("N=" + std::to_string(N), lhs == rhs);
    }
    return report;
}

std::vector<CheckReport> check_singular_polynomials(unsigned n_max) {
    auto table = shared_table(n_max);
    const auto family = formal_family(2 * n_max + 1);
    // Gegenbauer parameter -lambda - n/2 = -(lambda + 1/2) - (n-1)/2.
    const MultiPoly alpha_value = -L() - MultiPoly(make_rational(1, 2)) * Nsym();
    const Rational half(make_rational(1, 2));
    const GaussianRational i = GaussianRational::i();

    auto coeff = [&](unsigned k, unsigned p) {
        const RationalFunction& f = family[k].coeffs[p];
        return f.num().substitute(sym::alpha(), alpha_value);  // polynomial in alpha
    };

    CheckReport even{"singular-polynomial-even"}, odd{"singular-polynomial-odd"};
    std::size_t printed_even_holds = 0, printed_even_ratio_ok = 0;
    std::size_t printed_odd_holds = 0, printed_odd_ratio_ok = 0;

    for (int N = 0; N <= static_cast<int>(n_max); ++N) {
        const MultiPoly alpha_rise_N = pochhammer(alpha_value, N);
        const MultiPoly alpha_rise_N1 = pochhammer(alpha_value, N + 1);
        const Rational inv_fact = Rational(1) / Rational(factorial(N));

        MultiPoly rhs_even, rhs_odd, corrected_even, corrected_odd, printed_even, printed_odd_times_t;
        for (int j = 0; j <= N; ++j) {
            const MultiPoly tj = T().pow(j);
            rhs_even += shift_lambda(table->a(N, j), half) * tj;
            rhs_odd += shift_lambda(table->b(N, j), half) * tj;

            // x^p with x = i/sqrt(t): i^p t^(-p/2).
            const unsigned pe = 2 * N - 2 * j;
            const MultiPoly ce = coeff(2 * N, pe);
            corrected_even += MultiPoly(pow(i, pe)) * ce * tj;                            // t^N x^p
            printed_even += MultiPoly(pow(-GaussianRational(1), N) * pow(i, pe)) * ce * tj;  // (-t)^N x^p

            const unsigned po = 2 * N + 1 - 2 * j;
            const MultiPoly co = coeff(2 * N + 1, po);
            // -i t^(N+1) t^(-1/2) x^p = -i i^p t^j
            corrected_odd += MultiPoly(-i * pow(i, po)) * co * tj;
            // t * i (-t)^N t^(-1/2) x^p = i (-1)^N i^p t^j
            printed_odd_times_t += MultiPoly(i * pow(-GaussianRational(1), N) * pow(i, po)) * co * tj;
        }
        rhs_even = MultiPoly(inv_fact) * alpha_rise_N * rhs_even;
        rhs_odd = MultiPoly(2 * inv_fact) * alpha_rise_N1 * rhs_odd;

        const std::string key = "N=" + std::to_string(N);
        even.record(key, corrected_even == rhs_even, [&] { return residual_text(corrected_even - rhs_even); });
        odd.record(key, corrected_odd == rhs_odd, [&] { return residual_text(corrected_odd - rhs_odd); });

        const MultiPoly sign_N(N % 2 == 0 ? 1L : -1L);
        if (printed_even == rhs_even) ++printed_even_holds;
        if (printed_even == sign_N * rhs_even) ++printed_even_ratio_ok;
        // The printed odd form equals (-1)^(N+1)/t times the table form.
        if (printed_odd_times_t == T() * rhs_odd) ++printed_odd_holds;
        if (printed_odd_times_t == -sign_N * rhs_odd) ++printed_odd_ratio_ok;
    }
    even.info["minus_t_prefactor_form_holds"] = printed_even_holds;
    even.info["minus_t_prefactor_ratio_is_(-1)^N"] = printed_even_ratio_ok;
    odd.info["minus_t_prefactor_form_holds"] = printed_odd_holds;
    odd.info["minus_t_prefactor_ratio_is_(-1)^(N+1)/t"] = printed_odd_ratio_ok;
    return {even, odd};
}

namespace {

void require_item_range(int item, int N, int M, int j) {
    bool ok = false;
    if (item == 1 || item == 2) {
        ok = M >= 0 && M <= N - M - 1 && j >= M && j <= N - M - 1;
    } else if (item == 3) {
        ok = M >= 0 && M <= N - M && j >= M + 1 && j <= N - M;
    }
    if (!ok) {
        throw UsageError("Pochhammer identity item " + std::to_string(item) + " outside its range: N=" +
                         std::to_string(N) + ", M=" + std::to_string(M) + ", j=" + std::to_string(j));
    }
}

Rational q(long num, long den = 1) { return make_rational(num, den); }

// Left and right side of item 1..3. M = 0 is accepted as the degenerate
// single-term case; the bulk check starts at M = 1.
std::pair<Rational, Rational> item_sides(int item, int N, int M, int j) {
    require_item_range(item, N, M, j);
    // Offsets of the two lower-running Pochhammer factors and of the last one.
    Rational first, second, last;
    Rational lhs;
    switch (item) {
        case 1:
            first = 0, second = q(1, 2), last = q(3, 2);
            lhs = rising(q(N - M), M) * rising(q(N - M) + q(1, 2), M);
            break;
        case 2:
            first = q(1, 2), second = 1, last = q(1, 2);
            lhs = rising(q(N - M) + q(1, 2), M) * rising(q(N - M + 1), M);
            break;
        default:
            first = 1, second = q(3, 2), last = q(-1, 2);
            lhs = rising(q(N - M + 1), M) * rising(q(N - M) + q(3, 2), M);
            break;
    }
    Rational rhs(0);
    for (int l = 0; l <= M; ++l) {
        const Rational base(N - M - j + l);
        Rational term(binomial(M, l));
        if (l % 2 == 1) term = -term;
        term *= rising(q(j - l + 1), l);
        term *= rising(base + first, M - l);
        term *= rising(base + second, M - l);
        term *= rising(q(j - l - 2 * N + M) + last, l);
        rhs += term;
    }
    return {lhs, rhs};
}

}  // namespace

Rational pochhammer_sum_item1(int N, int M, int j) {
    if (M < 1) throw UsageError("Pochhammer identity item 1 needs M >= 1");
    return item_sides(1, N, M, j).second;
}

std::vector<CheckReport> check_pochhammer_identities(unsigned n_max) {
    if (n_max < 2) throw UsageError("check_pochhammer_identities needs N_max >= 2");
    std::vector<CheckReport> out;
    for (int item = 1; item <= 3; ++item) {
        CheckReport r{"pochhammer-item-" + std::to_string(item)};
        for (int N = 1; N <= static_cast<int>(n_max); ++N) {
            const int m_hi = item == 3 ? N / 2 : (N - 1) / 2;
            for (int M = 1; M <= m_hi; ++M) {
                const int j_lo = item == 3 ? M + 1 : M;
                const int j_hi = item == 3 ? N - M : N - M - 1;
                for (int j = j_lo; j <= j_hi; ++j) {
                    auto [lhs, rhs] = item_sides(item, N, M, j);
                    r.record("N=" + std::to_string(N) + ",M=" + std::to_string(M) + ",j=" + std::to_string(j),
                             lhs == rhs, [&] { return to_string(lhs) + " != " + to_string(rhs); });
                }
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

CheckReport check_gosper_recurrence(int M, int n_lo, int n_hi) {
    if (M < 1) throw UsageError("Gosper recurrence check needs M >= 1");
    if (n_lo < 2 * M + 1) {
        throw UsageError("N range must start at 2M+1 = " + std::to_string(2 * M + 1) + " so that S[N] is defined");
    }
    if (n_hi < n_lo) throw UsageError("empty N range");
    CheckReport r{"gosper-recurrence-M" + std::to_string(M)};
    for (int N = n_lo; N <= n_hi; ++N) {
        for (int j = M; j <= N - M - 1; ++j) {
            const Rational s_n = pochhammer_sum_item1(N, M, j);
            const Rational s_n1 = pochhammer_sum_item1(N + 1, M, j);
            const Rational value = Rational(N * (1L + 2L * N)) * s_n -
                                   Rational((-1L + 2L * M - 2L * N) * (M - N)) * s_n1;
            const std::string key = "N=" + std::to_string(N) + ",j=" + std::to_string(j);
            r.record(key, sgn(value) == 0, [&] { return "recurrence value " + to_string(value); });
            const Rational closed = rising(Rational(N - M), M) * rising(Rational(N - M) + q(1, 2), M);
            r.record(key + ",closed-form", s_n == closed,
                     [&] { return to_string(s_n) + " != " + to_string(closed); });
        }
    }
    return r;
}

SaalschutzValues pfaff_saalschutz(const Rational& a, const Rational& b, const Rational& c, unsigned n) {
    const Rational lower2 = 1 + a + b - c - Rational(n);
    if (sgn(rising(c, n)) == 0 || sgn(rising(lower2, n)) == 0 || sgn(rising(c - a - b, n)) == 0) {
        throw UsageError("invalid sample: vanishing lower-parameter Pochhammer");
    }
    Rational series(0), term(1);
    for (unsigned k = 0; k <= n; ++k) {
        if (k > 0) {
            const long km1 = static_cast<long>(k) - 1;
            term *= (a + km1) * (b + km1) * Rational(-static_cast<long>(n) + km1);
            term /= (c + km1) * (lower2 + km1) * Rational(static_cast<long>(k));
        }
        series += term;
    }
    const Rational closed = rising(c - a, n) * rising(c - b, n) / (rising(c, n) * rising(c - a - b, n));
    return {series, closed};
}

CheckReport check_pfaff_saalschutz(unsigned samples, unsigned max_n, std::uint64_t seed) {
    Rng rng(seed);
    CheckReport r{"pfaff-saalschutz"};
    std::size_t redraws = 0;
    for (unsigned s = 0; s < samples; ++s) {
        while (true) {
            const Rational a = rng.rational(9, 6), b = rng.rational(9, 6), c = rng.rational(9, 6);
            const auto n = static_cast<unsigned>(rng.uniform(0, max_n));
            try {
                auto v = pfaff_saalschutz(a, b, c, n);
                const std::string key = "a=" + to_string(a) + ",b=" + to_string(b) + ",c=" + to_string(c) +
                                        ",n=" + std::to_string(n);
                r.record(key, v.series == v.closed_form,
                         [&] { return to_string(v.series) + " != " + to_string(v.closed_form); });
                break;
            } catch (const UsageError&) {
                ++redraws;
            }
        }
    }
    r.info["seed"] = seed;
    r.info["redrawn_invalid_samples"] = redraws;
    return r;
}

std::vector<CheckReport> check_singular_relations(unsigned n_max) {
    if (n_max < 1) throw UsageError("check_singular_relations needs N_max >= 1");
    auto table = shared_table(n_max);
    const Rational half(make_rational(1, 2));
    const MultiPoly two_l_n = c(2) * L() + Nsym();
    auto A = [&](int N, int j) { return shift_lambda(table->a_or_zero(N, j), half); };
    auto B = [&](int N, int j) { return shift_lambda(table->b_or_zero(N, j), half); };

    CheckReport e1{"even-relation-1"}, e2{"even-relation-2"}, o1{"odd-relation-1"}, o2{"odd-relation-2"};
    for (int N = 0; N <= static_cast<int>(n_max); ++N) {
        if (N >= 1) {
            for (int j = 0; j <= N - 1; ++j) {
                MultiPoly r = c(N * (2L * j - 2L * N + 1)) * B(N - 1, j) - c(j + 1) * A(N, j + 1);
                e1.record(key_nj(N, j), r.is_zero(), [&] { return residual_text(r); });
            }
            for (int j = 0; j <= N; ++j) {
                MultiPoly r = c(N) * (two_l_n + c(-4L * N + 2L * j + 2)) * B(N - 1, j) + c(j - N) * A(N, j);
                e2.record(key_nj(N, j), r.is_zero(), [&] { return residual_text(r); });
            }
        }
        for (int j = 0; j <= N; ++j) {
            MultiPoly r = -(two_l_n + c(-2L * N)) * c(2L * N + 1 - 2L * j) * B(N, j) +
                          (two_l_n + c(-4L * N + 2L * j)) * A(N, j);
            o1.record(key_nj(N, j), r.is_zero(), [&] { return residual_text(r); });
        }
        for (int j = 0; j <= N - 1; ++j) {
            MultiPoly r = c(N - j) * A(N, j) + c(j + 1) * (two_l_n + c(-2L * N)) * B(N, j + 1);
            o2.record(key_nj(N, j), r.is_zero(), [&] { return residual_text(r); });
        }
    }
    return {e1, e2, o1, o2};
}

}  // namespace spinres::gegenbauer
