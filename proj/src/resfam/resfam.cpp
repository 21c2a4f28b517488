#include "spinres/resfam/resfam.hpp"

#include "spinres/errors.hpp"
#include "spinres/gegenbauer/gegenbauer.hpp"
#include "spinres/parallel.hpp"
#include "spinres/random.hpp"

#include <memory>
#include <mutex>

namespace spinres::resfam {

using op::OpMonomial;

namespace {

const MultiPoly& L() {
    static const MultiPoly p = MultiPoly::variable(sym::lambda());
    return p;
}
const MultiPoly& Nsym() {
    static const MultiPoly p = MultiPoly::variable(sym::n());
    return p;
}

MultiPoly q(long num, long den = 1) { return MultiPoly(make_rational(num, den)); }

Rational pow2(unsigned k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return Rational(r);
}

Rational inv_factorial(unsigned k) { return Rational(1) / Rational(factorial(k)); }

// 1 / (c * j! * (1/2 + lambda)_p)
RationalFunction solution_coefficient(const Rational& c, unsigned j, unsigned p) {
    const MultiPoly den = MultiPoly(c * Rational(factorial(j))) * pochhammer(L() + q(1, 2), p);
    return RationalFunction(MultiPoly(1), den);
}

OpPoly restricted(unsigned eps, unsigned a, unsigned b, RationalFunction c) {
    return OpPoly(OpMonomial{eps, a, b, true}, std::move(c));
}

}  // namespace

OpPoly solution_op_flat(unsigned l) {
    const unsigned k = l / 2;
    const RationalFunction c = (l % 2 == 0) ? solution_coefficient(pow2(2 * k), k, k)
                                            : solution_coefficient(pow2(2 * k + 1), k, k + 1);
    return c * op::pow(OpPoly::d_tilde(), l);
}

OpPoly delta_plus(unsigned order) {
    const OpPoly iota = OpPoly::iota(), dt = OpPoly::d_t(), dn = OpPoly::d_n(), dtilde = OpPoly::d_tilde();
    const OpPoly dpn = OpPoly::partial_n();
    OpPoly out;
    const unsigned N = order / 2;
    if (order % 2 == 0) {
        for (unsigned j = 0; j <= N; ++j) {
            const RationalFunction c = RationalFunction(inv_factorial(2 * N - 2 * j)) *
                                       solution_coefficient(pow2(2 * j), j, j);
            out += c * (op::pow(dtilde, 2 * j) * iota * op::pow(dpn, 2 * N - 2 * j));
        }
        for (unsigned j = 0; j + 1 <= N; ++j) {
            const RationalFunction c = RationalFunction(inv_factorial(2 * N - 2 * j - 1)) *
                                       solution_coefficient(pow2(2 * j + 1), j, j + 1);
            out -= c * (op::pow(dtilde, 2 * j) * iota * op::pow(dpn, 2 * N - 2 * j - 2) * dt * dn);
        }
        return out;
    }
    for (unsigned j = 0; j <= N; ++j) {
        const RationalFunction c1 = RationalFunction(inv_factorial(2 * N - 2 * j)) *
                                    solution_coefficient(pow2(2 * j + 1), j, j + 1);
        out += c1 * (op::pow(dtilde, 2 * j) * iota * op::pow(dpn, 2 * N - 2 * j) * dt);
        const RationalFunction c2 = RationalFunction(inv_factorial(2 * N - 2 * j + 1)) *
                                    solution_coefficient(pow2(2 * j), j, j);
        out -= c2 * (op::pow(dtilde, 2 * j) * iota * op::pow(dpn, 2 * N - 2 * j) * dn);
    }
    return OpPoly::e_n() * out;
}

std::vector<Pole> pole_structure(unsigned order) {
    std::map<Rational, unsigned> poles;
    const OpPoly delta = delta_plus(order);
    for (const auto& [m, c] : delta.terms()) {
        for (const auto& [root, mult] : rational_roots(c.den(), sym::lambda())) {
            unsigned& slot = poles[root];
            slot = std::max(slot, mult);
        }
    }
    std::vector<Pole> out;
    for (const auto& [at, mult] : poles) out.push_back({at, mult});
    return out;
}

OpPoly resfam_via_residue(unsigned order) {
    const unsigned N = order / 2;
    const MultiPoly half_n = q(1, 2) * Nsym();
    MultiPoly prefactor;
    MultiPoly shifted;
    if (order % 2 == 0) {
        prefactor = MultiPoly(pow2(2 * N) * Rational(factorial(N))) * pochhammer(L() + half_n - q(2 * N), N);
        shifted = L() + half_n - q(4L * N + 1, 2);
    } else {
        prefactor = MultiPoly(pow2(2 * N + 1) * Rational(factorial(N))) *
                    pochhammer(L() + half_n - q(2 * N + 1), N + 1);
        shifted = L() + half_n - q(4L * N + 3, 2);
    }
    OpPoly out = RationalFunction(prefactor) * delta_plus(order).substitute(sym::lambda(), shifted);
    for (const auto& [m, c] : out.terms()) {
        if (!c.is_polynomial()) {
            throw DomainError("residue normalization leaves denominator " + c.den().to_string() + " at " +
                              op::to_string(m) + " in order " + std::to_string(order));
        }
    }
    return out;
}

namespace {

OpPoly build_explicit(unsigned order) {
    const unsigned N = order / 2;
    auto table = gegenbauer::shared_table(N);
    const Rational mhalf = make_rational(-1, 2);
    auto A = [&](unsigned n, unsigned j) { return RationalFunction(gegenbauer::shift_lambda(table->a(n, j), mhalf)); };
    auto B = [&](unsigned n, unsigned j) { return RationalFunction(gegenbauer::shift_lambda(table->b(n, j), mhalf)); };
    OpPoly out;
    if (order % 2 == 0) {
        for (unsigned j = 0; j <= N; ++j) out += restricted(0, 2 * j, 2 * N - 2 * j, A(N, j));
        for (unsigned j = 0; j + 1 <= N; ++j) {
            out += restricted(0, 2 * j + 1, 2 * N - 2 * j - 1, RationalFunction(static_cast<long>(2 * N)) * B(N - 1, j));
        }
        if (N % 2 == 1) out = -out;
        return out;
    }
    const RationalFunction c_N(MultiPoly(2) * L() + Nsym() - MultiPoly(static_cast<long>(2 * N + 2)));
    for (unsigned j = 0; j <= N; ++j) {
        out += restricted(1, 2 * j, 2 * N - 2 * j + 1, B(N, j) * c_N);
        out -= restricted(1, 2 * j + 1, 2 * N - 2 * j, A(N, j));
    }
    if (N % 2 == 0) out = -out;
    return out;
}

}  // namespace

const OpPoly& resfam_explicit(unsigned order) {
    static std::mutex mutex;
    static std::map<unsigned, std::unique_ptr<OpPoly>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(order);
        if (it != cache.end()) return *it->second;
    }
    auto built = std::make_unique<OpPoly>(build_explicit(order));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(order, std::move(built));
    return *it->second;
}

OpPoly dirac_power_expand(unsigned M) { return op::pow(OpPoly::d_t() + OpPoly::d_n(), 2 * M + 1); }

OpPoly dirac_power_binomial(unsigned M) {
    OpPoly out;
    for (unsigned l = 0; l <= 2 * M + 1; ++l) {
        out += OpPoly(OpMonomial{0, l, 2 * M + 1 - l, false}, RationalFunction(Rational(binomial(M, l / 2))));
    }
    return out;
}

unsigned lambda_degree(const OpPoly& family) {
    unsigned d = 0;
    for (const auto& [m, c] : family.terms()) {
        d = std::max({d, c.num().degree(sym::lambda()), c.den().degree(sym::lambda())});
    }
    return d;
}

OpPoly at_boundary_dim(const OpPoly& family, unsigned m) {
    return family.substitute(sym::n(), GaussianRational(static_cast<long>(m) + 1));
}

OpPoly at_lambda(const OpPoly& family, const MultiPoly& value) { return family.substitute(sym::lambda(), value); }

std::vector<FactorizationInstance> left_factorization_instances(unsigned order_max) {
    std::vector<FactorizationInstance> out;
    const MultiPoly half_n = q(1, 2) * Nsym();
    const OpPoly en = OpPoly::e_n(), dt = OpPoly::d_t();
    for (unsigned N = 1; 2 * N <= order_max; ++N) {
        for (unsigned M = 0; M + 1 <= N; ++M) {
            const MultiPoly at = q(2 * N - M) - half_n;
            out.push_back({"even,N=" + std::to_string(N) + ",M=" + std::to_string(M),
                           at_lambda(resfam_explicit(2 * N), at),
                           en * op::pow(dt, 2 * M + 1) * at_lambda(resfam_explicit(2 * N - 2 * M - 1), at)});
        }
    }
    for (unsigned N = 1; 2 * N + 1 <= order_max; ++N) {
        for (unsigned M = 0; M <= N; ++M) {
            const MultiPoly at = q(2 * N + 1 - M) - half_n;
            out.push_back({"odd,N=" + std::to_string(N) + ",M=" + std::to_string(M),
                           at_lambda(resfam_explicit(2 * N + 1), at),
                           en * op::pow(dt, 2 * M + 1) * at_lambda(resfam_explicit(2 * N - 2 * M), at)});
        }
    }
    return out;
}

std::vector<FactorizationInstance> right_factorization_instances(unsigned order_max) {
    std::vector<FactorizationInstance> out;
    const MultiPoly half_n = q(1, 2) * Nsym();
    const OpPoly en = OpPoly::e_n();
    for (unsigned N = 1; 2 * N <= order_max; ++N) {
        for (unsigned M = 0; M + 1 <= N; ++M) {
            const MultiPoly at_lhs = q(1, 2) - half_n + q(M);
            const MultiPoly at_rhs = q(-1, 2) - half_n - q(M);
            out.push_back({"even,N=" + std::to_string(N) + ",M=" + std::to_string(M),
                           at_lambda(resfam_explicit(2 * N), at_lhs),
                           -(en * at_lambda(resfam_explicit(2 * (N - M - 1) + 1), at_rhs) * dirac_power_expand(M))});
        }
    }
    for (unsigned N = 1; 2 * N + 1 <= order_max; ++N) {
        for (unsigned M = 0; M <= N; ++M) {
            const MultiPoly at_lhs = q(1, 2) - half_n + q(M);
            const MultiPoly at_rhs = q(-1, 2) - half_n - q(M);
            out.push_back({"odd,N=" + std::to_string(N) + ",M=" + std::to_string(M),
                           at_lambda(resfam_explicit(2 * N + 1), at_lhs),
                           en * at_lambda(resfam_explicit(2 * N - 2 * M), at_rhs) * dirac_power_expand(M)});
        }
    }
    return out;
}

std::vector<FactorizationInstance> example_factorizations() {
    const OpPoly en = OpPoly::e_n(), dt = OpPoly::d_t(), iota = OpPoly::iota();
    const OpPoly dirac = OpPoly::d_t() + OpPoly::d_n();
    // lambda = -(n - k)/2
    auto at = [](long k) { return q(k, 2) - q(1, 2) * Nsym(); };
    auto D = [&](unsigned order, long k) { return at_lambda(resfam_explicit(order), at(k)); };
    std::vector<FactorizationInstance> out;
    out.push_back({"D1(-(n-2)/2)", D(1, 2), en * dt * iota});
    out.push_back({"D1(-(n-1)/2)", D(1, 1), en * iota * dirac});
    out.push_back({"D2(-(n-4)/2)", D(2, 4), en * dt * D(1, 4)});
    out.push_back({"D2(-(n-1)/2)", D(2, 1), -(en * D(1, -1) * dirac)});
    out.push_back({"D3(-(n-4)/2)", D(3, 4), en * op::pow(dt, 3) * iota});
    out.push_back({"D3(-(n-3)/2)", D(3, 3), en * iota * op::pow(dirac, 3)});
    out.push_back({"D3(-(n-6)/2)", D(3, 6), en * dt * D(2, 6)});
    out.push_back({"D3(-(n-1)/2)", D(3, 1), en * D(2, -1) * dirac});
    return out;
}

CheckReport verify_instances(const std::string& name, const std::vector<FactorizationInstance>& instances,
                             unsigned jobs) {
    std::vector<OpPoly> diffs(instances.size());
    parallel_for(instances.size(), jobs, [&](std::size_t i) { diffs[i] = instances[i].lhs - instances[i].rhs; });
    CheckReport r{name};
    for (std::size_t i = 0; i < instances.size(); ++i) {
        r.record(instances[i].key, diffs[i].is_zero(), [&] { return "lhs - rhs = " + diffs[i].to_string(); });
    }
    return r;
}

CheckReport verify_left_factorizations(unsigned order_max, unsigned jobs) {
    if (order_max < 2) throw UsageError("left factorizations need max order >= 2");
    auto r = verify_instances("left-factorizations", left_factorization_instances(order_max), jobs);
    r.info["max_order"] = order_max;
    return r;
}

CheckReport verify_right_factorizations(unsigned order_max, unsigned jobs) {
    if (order_max < 2) throw UsageError("right factorizations need max order >= 2");
    auto r = verify_instances("right-factorizations", right_factorization_instances(order_max), jobs);
    r.info["max_order"] = order_max;
    return r;
}

CheckReport verify_factorizations_sampled(unsigned order_max, unsigned samples, std::uint64_t seed, unsigned jobs) {
    auto instances = left_factorization_instances(order_max);
    for (auto& inst : right_factorization_instances(order_max)) {
        inst.key = "right," + inst.key;
        instances.push_back(std::move(inst));
    }
    Rng rng(seed);
    std::vector<Rational> ns;
    for (unsigned s = 0; s < samples; ++s) ns.push_back(rng.rational(40, 5));
    const std::size_t count = instances.size() * ns.size();
    std::vector<char> ok(count);
    parallel_for(count, jobs, [&](std::size_t k) {
        const auto& inst = instances[k / ns.size()];
        const GaussianRational n(ns[k % ns.size()]);
        ok[k] = inst.lhs.substitute(sym::n(), n) == inst.rhs.substitute(sym::n(), n);
    });
    CheckReport r{"factorizations-sampled"};
    for (std::size_t k = 0; k < count; ++k) {
        r.record(instances[k / ns.size()].key + ",n=" + to_string(ns[k % ns.size()]), ok[k] != 0);
    }
    r.info["seed"] = seed;
    r.info["samples"] = samples;
    return r;
}

CheckReport verify_oracle(unsigned order_max, unsigned jobs) {
    struct Outcome {
        bool equal = false;
        std::string error;
        unsigned degree = 0;
        unsigned pure_normal_degree = 0;
    };
    std::vector<Outcome> outcomes(order_max + 1);
    parallel_for(order_max + 1, jobs, [&](std::size_t order) {
        Outcome& o = outcomes[order];
        const OpPoly& expl = resfam_explicit(static_cast<unsigned>(order));
        o.degree = lambda_degree(expl);
        const unsigned eps = order % 2;
        o.pure_normal_degree =
            expl.coefficient(OpMonomial{eps, 0, static_cast<unsigned>(order), true}).num().degree(sym::lambda());
        try {
            o.equal = resfam_via_residue(static_cast<unsigned>(order)) == expl;
        } catch (const DomainError& e) {
            o.error = e.what();
        }
    });
    CheckReport r{"oracle-equivalence"};
    Json attained = Json::array();
    for (unsigned order = 0; order <= order_max; ++order) {
        const Outcome& o = outcomes[order];
        const std::string key = "order=" + std::to_string(order);
        r.record(key, o.error.empty() && o.equal,
                 [&] { return o.error.empty() ? std::string("residue and explicit forms differ") : o.error; });
        const unsigned bound = order / 2 + 1;
        r.record(key + ",lambda-degree", o.degree <= bound, [&] {
            return "lambda-degree " + std::to_string(o.degree) + " exceeds " + std::to_string(bound);
        });
        if (o.degree == bound && o.pure_normal_degree == bound) attained.push_back(order);
    }
    r.info["max_order"] = order_max;
    r.info["lambda_degree_bound_attained_by_pure_normal_term"] = attained;
    return r;
}

CheckReport verify_dirac_power(unsigned m_max) {
    CheckReport r{"dirac-power-binomial"};
    for (unsigned M = 0; M <= m_max; ++M) {
        const OpPoly direct = dirac_power_expand(M), closed = dirac_power_binomial(M);
        r.record("M=" + std::to_string(M), direct == closed,
                 [&] { return "difference " + (direct - closed).to_string(); });
    }
    return r;
}

CheckReport verify_pole_structure(unsigned order_max) {
    CheckReport r{"pole-structure"};
    for (unsigned order = 0; order <= order_max; ++order) {
        std::vector<Pole> expected;
        for (unsigned k = (order + 1) / 2; k-- > 0;) expected.push_back({make_rational(-2 * static_cast<long>(k) - 1, 2), 1});
        const auto got = pole_structure(order);
        r.record("order=" + std::to_string(order), got == expected, [&] {
            std::string s = "poles:";
            for (const auto& p : got) s += " " + to_string(p.at) + "^" + std::to_string(p.multiplicity);
            return s;
        });
    }
    return r;
}

}  // namespace spinres::resfam
