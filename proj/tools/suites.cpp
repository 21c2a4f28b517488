#include "suites.hpp"

#include "spinres/clifford/clifford.hpp"
#include "spinres/errors.hpp"
#include "spinres/gegenbauer/identities.hpp"
#include "spinres/poisson/poisson.hpp"
#include "spinres/resfam/resfam.hpp"

#include <chrono>
#include <functional>

#ifndef SPINRES_VERSION
#define SPINRES_VERSION "0.0.0"
#endif

namespace spinres::cli {

const std::vector<std::string> kSuites = {"factorizations", "oracle", "gegenbauer", "singular",
                                          "clifford",       "eigen",  "poisson"};

namespace {

struct SuiteOutput {
    std::vector<CheckReport> reports;
    Json parameters = Json::object();
    Json extra = Json::object();
    Json fingerprints = Json::object();
};

unsigned positive(const std::optional<unsigned>& v, unsigned fallback, const char* flag) {
    const unsigned x = v.value_or(fallback);
    if (x == 0) throw UsageError(std::string(flag) + " must be positive");
    return x;
}

void add_all(std::vector<CheckReport>& out, std::vector<CheckReport> more) {
    for (auto& r : more) out.push_back(std::move(r));
}

SuiteOutput suite_factorizations(const Params& p) {
    SuiteOutput s;
    const unsigned order = positive(p.max_order, 25, "--max-order");
    if (order < 2) throw UsageError("--max-order must be >= 2 for factorizations");
    const unsigned samples = p.samples.value_or(4);
    s.parameters = {{"max_order", order}, {"samples", samples}, {"seed", p.seed}};
    s.reports.push_back(resfam::verify_instances("worked-examples", resfam::example_factorizations(), p.jobs));
    s.reports.push_back(resfam::verify_left_factorizations(order, p.jobs));
    s.reports.push_back(resfam::verify_right_factorizations(order, p.jobs));
    if (samples > 0) s.reports.push_back(resfam::verify_factorizations_sampled(order, samples, p.seed, p.jobs));
    return s;
}

SuiteOutput suite_oracle(const Params& p) {
    SuiteOutput s;
    const unsigned order = positive(p.max_order, 12, "--max-order");
    s.parameters = {{"max_order", order}};
    s.reports.push_back(resfam::verify_oracle(order, p.jobs));
    s.reports.push_back(resfam::verify_pole_structure(order));
    s.reports.push_back(resfam::verify_dirac_power(order / 2));
    return s;
}

SuiteOutput suite_gegenbauer(const Params& p) {
    SuiteOutput s;
    const unsigned n_max = positive(p.max_order, 20, "--max-order");
    const unsigned degree = positive(p.degree, 30, "--degree");
    const unsigned samples = p.samples.value_or(200);
    if (n_max < 2) throw UsageError("--max-order must be >= 2 for gegenbauer");
    s.parameters = {{"max_order", n_max}, {"degree", degree}, {"samples", samples}, {"seed", p.seed}};
    add_all(s.reports, gegenbauer::check_coeff_recurrences(n_max));
    add_all(s.reports, gegenbauer::check_table_vs_gegenbauer(n_max));
    s.reports.push_back(gegenbauer::check_cross_construction(degree));
    s.reports.push_back(gegenbauer::check_derivative_identity(degree));
    add_all(s.reports, gegenbauer::check_singular_polynomials(n_max));
    add_all(s.reports, gegenbauer::check_pochhammer_identities(n_max));
    for (int M = 1; 2 * M + 1 <= static_cast<int>(n_max); ++M) {
        auto r = gegenbauer::check_gosper_recurrence(M, 2 * M + 1, static_cast<int>(n_max));
        r.name += ",M=" + std::to_string(M);
        s.reports.push_back(std::move(r));
    }
    if (samples > 0) s.reports.push_back(gegenbauer::check_pfaff_saalschutz(samples, 8, p.seed));
    return s;
}

SuiteOutput suite_singular(const Params& p) {
    SuiteOutput s;
    const unsigned n_max = positive(p.max_order, 20, "--max-order");
    s.parameters = {{"max_order", n_max}};
    s.reports = gegenbauer::check_singular_relations(n_max);
    return s;
}

std::vector<clifford::CliffordRep> clifford_reps(const Params& p, std::vector<unsigned> default_dims) {
    std::vector<clifford::CliffordRep> reps;
    if (p.signature) {
        const auto [sp, sq] = *p.signature;
        if (sq < 1 || sp + sq < 2) throw UsageError("--signature needs q >= 1 and p + q >= 2");
        if (p.boundary_dim && *p.boundary_dim + 1 != sp + sq) {
            throw UsageError("--signature p,q must satisfy p + q = boundary dimension + 1");
        }
        reps.push_back(clifford::CliffordRep::build(sp, sq));
        return reps;
    }
    if (p.boundary_dim) default_dims = {positive(p.boundary_dim, 1, "--boundary-dim")};
    for (unsigned m : default_dims) reps.push_back(clifford::CliffordRep::build(0, m + 1));
    return reps;
}

std::string sig_name(const clifford::CliffordRep& rep) {
    return "Cl(" + std::to_string(rep.p()) + "," + std::to_string(rep.q()) + ")";
}

SuiteOutput suite_clifford(const Params& p) {
    SuiteOutput s;
    const auto reps = clifford_reps(p, {2, 3, 4});
    const unsigned order = p.max_order.value_or(5);
    const unsigned fields = positive(p.fields, 25, "--fields");
    const unsigned degree = positive(p.degree, 5, "--degree");
    const unsigned pairs = p.samples.value_or(1000);
    Json dims = Json::array();
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const auto& rep = reps[k];
        const std::uint64_t seed = p.seed + 1000 * k;
        const std::string tag = "," + sig_name(rep);
        dims.push_back({rep.p(), rep.q()});
        s.fingerprints[sig_name(rep)] = rep.fingerprint();
        auto add = [&](CheckReport r) {
            r.name += tag;
            s.reports.push_back(std::move(r));
        };
        add(clifford::check_defining_relations(rep));
        add(clifford::check_realization_consistency(rep, pairs, degree, seed));
        add(clifford::check_factorization_realizations(rep, order, fields, degree, seed + 1, p.jobs));
        add(clifford::check_separating_family(rep, 2, 2, 2, seed + 2));
        add(clifford::check_signature_projectors(rep));
    }
    s.parameters = {{"signatures", dims}, {"max_order", order}, {"fields", fields}, {"degree", degree},
                    {"pairs", pairs},     {"seed", p.seed}};
    return s;
}

SuiteOutput suite_eigen(const Params& p) {
    SuiteOutput s;
    const auto reps = clifford_reps(p, {3, 4});
    std::vector<Rational> lambdas;
    if (p.lambda) {
        try {
            lambdas = {parse_rational(*p.lambda)};
        } catch (const std::exception&) {
            throw UsageError("--lambda must be a rational p/q, got '" + *p.lambda + "'");
        }
    } else {
        lambdas = {make_rational(1, 3), make_rational(2, 5), make_rational(7, 2)};
    }
    const unsigned K = positive(p.order, 8, "--order");
    const unsigned fields = positive(p.fields, 10, "--fields");
    const unsigned degree = positive(p.degree, 6, "--degree");
    Json dims = Json::array(), lams = Json::array();
    for (const auto& l : lambdas) lams.push_back(to_string(l));
    for (std::size_t k = 0; k < reps.size(); ++k) {
        const auto& rep = reps[k];
        if (rep.p() != 0) throw UsageError("verify eigen supports Riemannian signature (p = 0) only");
        const unsigned m = rep.n() - 1;
        dims.push_back(m);
        s.fingerprints[sig_name(rep)] = rep.fingerprint();
        for (std::size_t j = 0; j < lambdas.size(); ++j) {
            auto res = clifford::eigen_recurrence_check(m, lambdas[j], K, fields, degree, p.seed + 100 * k + j);
            res.report.name += ",m=" + std::to_string(m) + ",lambda=" + to_string(lambdas[j]);
            s.reports.push_back(std::move(res.report));
        }
    }
    s.parameters = {{"boundary_dims", dims}, {"lambdas", lams}, {"order", K},
                    {"fields", fields},      {"degree", degree}, {"seed", p.seed}};
    return s;
}

SuiteOutput suite_poisson(const Params& p) {
    SuiteOutput s;
    std::vector<unsigned> dims = {2, 3, 4};
    if (p.dim) {
        if (*p.dim < 2) throw UsageError("--dim must be >= 2");
        dims = {*p.dim};
    }
    const unsigned samples = positive(p.samples, 10, "--samples");
    Json c = Json::object(), match = Json::object(), twisted = Json::object();
    for (unsigned n : dims) {
        auto res = poisson::eigen_check(n, samples, p.seed + n, p.jobs);
        const std::string key = "n=" + std::to_string(n);
        c[key] = res.c ? Json(res.c->to_string()) : Json(nullptr);
        match[key] = res.matches_claim;
        twisted[key] = res.report.info["twisted_relation"];
        res.report.name += "," + key;
        s.reports.push_back(std::move(res.report));
    }
    for (unsigned n : dims) {
        if (n < 3) continue;
        const auto rep = clifford::CliffordRep::build(0, n);
        s.fingerprints[sig_name(rep)] = rep.fingerprint();
        auto r = poisson::projector_check(rep, 50, p.seed + 10 * n);
        r.name += ",n=" + std::to_string(n);
        s.reports.push_back(std::move(r));
    }
    s.parameters = {{"dims", dims}, {"samples", samples}, {"seed", p.seed}};
    s.extra = {{"c_polynomial", c}, {"matches_claimed_eigenvalue", match}, {"twisted_relation", twisted}};
    return s;
}

Json run_one(const std::string& suite, const Params& p, Json& fingerprints, std::size_t& instances,
             std::size_t& failures) {
    static const std::map<std::string, std::function<SuiteOutput(const Params&)>> table = {
        {"factorizations", suite_factorizations}, {"oracle", suite_oracle},   {"gegenbauer", suite_gegenbauer},
        {"singular", suite_singular},             {"clifford", suite_clifford}, {"eigen", suite_eigen},
        {"poisson", suite_poisson},
    };
    auto it = table.find(suite);
    if (it == table.end()) throw UsageError("unknown suite '" + suite + "'");
    const auto start = std::chrono::steady_clock::now();
    SuiteOutput out = it->second(p);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

    Json j;
    j["suite"] = suite;
    j["parameters"] = out.parameters;
    std::size_t inst = 0, fail = 0;
    Json reports = Json::array();
    for (const auto& r : out.reports) {
        inst += r.instances;
        fail += r.failures.size();
        reports.push_back(r.to_json());
    }
    j["instances"] = inst;
    j["failure_count"] = fail;
    j["passed"] = fail == 0;
    for (auto& [k, v] : out.extra.items()) j[k] = v;
    j["details"] = std::move(reports);
    if (p.timing) j["wall_ms"] = ms.count();
    for (auto& [k, v] : out.fingerprints.items()) fingerprints[k] = v;
    instances += inst;
    failures += fail;
    return j;
}

}  // namespace

Json run_verify(const std::string& suite, const Params& params) {
    if (params.jobs == 0) throw UsageError("--jobs must be positive");
    Json report;
    report["tool"] = "spinres";
    report["engine_version"] = SPINRES_VERSION;
    report["command"] = "verify " + suite;
    report["seed"] = params.seed;
    report["jobs"] = params.jobs;
    Json fingerprints = Json::object();
    Json suites = Json::array();
    std::size_t instances = 0, failures = 0;
    const auto start = std::chrono::steady_clock::now();
    if (suite == "all") {
        // Defaults only; seed, jobs and timing carry over.
        Params defaults;
        defaults.seed = params.seed;
        defaults.jobs = params.jobs;
        defaults.timing = params.timing;
        for (const auto& name : kSuites) suites.push_back(run_one(name, defaults, fingerprints, instances, failures));
    } else {
        suites.push_back(run_one(suite, params, fingerprints, instances, failures));
    }
    report["suites"] = std::move(suites);
    report["fingerprints"] = std::move(fingerprints);
    report["instances"] = instances;
    report["failure_count"] = failures;
    report["passed"] = failures == 0;
    if (params.timing) {
        report["wall_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    }
    return report;
}

bool report_passed(const Json& report) { return report.value("passed", false); }

}  // namespace spinres::cli
