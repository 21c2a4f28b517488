// One line per acceptance criterion: PASS/FAIL, elapsed time against its
// budget, and a short detail. Exit status is nonzero when any criterion fails.
#include "../common/displayed_families.hpp"
#include "spinres/clifford/clifford.hpp"
#include "spinres/gegenbauer/identities.hpp"
#include "spinres/poisson/poisson.hpp"
#include "spinres/resfam/resfam.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace spinres;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string cli_path;

// Runs the CLI and returns {exit status, stdout}.
std::pair<int, std::string> run_cli(const std::string& args) {
    const std::string cmd = "'" + cli_path + "' " + args;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void absorb(Outcome& o, const CheckReport& r) {
    if (!r.passed()) {
        o.ok = false;
        o.detail += r.name + ": " + std::to_string(r.failures.size()) + "/" + std::to_string(r.instances) +
                    " failed (first " + r.failures.front().key + "); ";
    }
    if (r.instances == 0) {
        o.ok = false;
        o.detail += r.name + ": no instances; ";
    }
}

void absorb(Outcome& o, const std::vector<CheckReport>& rs) {
    for (const auto& r : rs) absorb(o, r);
}

std::size_t instance_total(const std::vector<CheckReport>& rs) {
    std::size_t n = 0;
    for (const auto& r : rs) n += r.instances;
    return n;
}

Outcome closed_forms() {
    Outcome o;
    const auto shown = testdata::displayed_families();
    for (unsigned N = 1; N <= 4; ++N) {
        const auto [status, out] = run_cli("emit resfam --order " + std::to_string(N) + " --json");
        if (status != 0) {
            o.ok = false;
            o.detail += "order " + std::to_string(N) + ": exit " + std::to_string(status) + "; ";
            continue;
        }
        const Json emitted = Json::parse(out);
        if (emitted["terms"] != shown[N - 1].to_json() || resfam::resfam_explicit(N) != shown[N - 1]) {
            o.ok = false;
            o.detail += "order " + std::to_string(N) + " differs; ";
        }
    }
    if (o.ok) o.detail = "orders 1..4 term-by-term equal via CLI";
    return o;
}

Outcome oracle_suite() {
    Outcome o;
    const auto r = resfam::verify_oracle(12, 1);
    absorb(o, r);
    if (o.ok) o.detail = std::to_string(r.instances) + " checks, orders 0..12";
    return o;
}

Outcome factorization(bool left) {
    Outcome o;
    const auto r = left ? resfam::verify_left_factorizations(25, 1) : resfam::verify_right_factorizations(25, 1);
    absorb(o, r);
    if (o.ok) o.detail = std::to_string(r.instances) + " (N, M) instances, order <= 25";
    return o;
}

Outcome gegenbauer_suite() {
    Outcome o;
    std::vector<CheckReport> rs = gegenbauer::check_coeff_recurrences(20);
    for (auto& r : gegenbauer::check_table_vs_gegenbauer(20)) rs.push_back(std::move(r));
    rs.push_back(gegenbauer::check_cross_construction(30));
    rs.push_back(gegenbauer::check_derivative_identity(30));
    for (auto& r : gegenbauer::check_singular_polynomials(20)) rs.push_back(std::move(r));
    absorb(o, rs);
    if (o.ok) o.detail = std::to_string(instance_total(rs)) + " identities, N <= 20, degree <= 30";
    return o;
}

Outcome pochhammer_suite() {
    Outcome o;
    std::vector<CheckReport> rs = gegenbauer::check_pochhammer_identities(20);
    for (int M = 1; 2 * M + 1 <= 20; ++M) rs.push_back(gegenbauer::check_gosper_recurrence(M, 2 * M + 1, 20));
    rs.push_back(gegenbauer::check_pfaff_saalschutz(200, 8, 42));
    absorb(o, rs);
    if (rs.back().instances != 200) {
        o.ok = false;
        o.detail += "expected 200 Pfaff-Saalschutz samples; ";
    }
    if (o.ok) o.detail = std::to_string(instance_total(rs)) + " instances incl. 200 Pfaff-Saalschutz samples";
    return o;
}

Outcome singular_suite() {
    Outcome o;
    const auto rs = gegenbauer::check_singular_relations(20);
    absorb(o, rs);
    if (o.ok) o.detail = std::to_string(instance_total(rs)) + " relation instances, N <= 20";
    return o;
}

Outcome clifford_realization() {
    Outcome o;
    std::vector<CheckReport> rs;
    for (unsigned n : {3u, 4u, 5u}) {
        const auto rep = clifford::CliffordRep::build(0, n);
        rs.push_back(clifford::check_defining_relations(rep));
        rs.push_back(clifford::check_realization_consistency(rep, 1000, 5, 42 + n));
        rs.push_back(clifford::check_factorization_realizations(rep, 5, 25, 5, 420 + n, 1));
    }
    absorb(o, rs);
    if (o.ok) o.detail = std::to_string(instance_total(rs)) + " checks at n = 3, 4, 5 (25 fields, degree 5)";
    return o;
}

Outcome eigen_suite() {
    Outcome o;
    std::vector<CheckReport> rs;
    for (unsigned m : {3u, 4u}) {
        for (const Rational& lam : {make_rational(1, 3), make_rational(2, 5), make_rational(7, 2)}) {
            rs.push_back(clifford::eigen_recurrence_check(m, lam, 8, 10, 6, 900 + m).report);
        }
    }
    absorb(o, rs);
    if (o.ok) o.detail = std::to_string(instance_total(rs)) + " grade and parity checks";
    return o;
}

Outcome poisson_eigen() {
    Outcome o;
    std::ostringstream info;
    for (unsigned n : {2u, 3u, 4u}) {
        const auto res = poisson::eigen_check(n, 10, 42 + n);
        absorb(o, res.report);
        info << "n=" << n << ": c=" << (res.c ? res.c->to_string() : "none")
             << " matches_claim=" << (res.matches_claim ? "yes" : "no")
             << " twisted c'=" << (res.twisted_c ? res.twisted_c->to_string() : "none")
             << (res.twisted_holds ? " (holds)" : " (fails)") << "; ";
    }
    o.detail += info.str();
    return o;
}

Outcome determinism() {
    Outcome o;
    const auto a = run_cli("verify all --seed 42");
    const auto b = run_cli("verify all --seed 42");
    o.ok = a.first >= 0 && a.first <= 1 && !a.second.empty() && a == b;
    o.detail = o.ok ? std::to_string(a.second.size()) + " bytes identical across two runs (exit " +
                          std::to_string(a.first) + ")"
                    : "reports differ or CLI failed (exit " + std::to_string(a.first) + ")";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-cli>\n";
        return 2;
    }
    cli_path = argv[1];
    struct Criterion {
        int id;
        std::string name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "closed-form reproduction, orders 1..4", 1, closed_forms},
        {2, "residue route equals explicit route, order <= 12", 60, oracle_suite},
        {3, "tangential-Dirac factorizations, order <= 25", 180, [] { return factorization(true); }},
        {4, "ambient-Dirac factorizations, order <= 25", 180, [] { return factorization(false); }},
        {5, "Gegenbauer recurrences, constructions, derivative, reconstruction", 30, gegenbauer_suite},
        {6, "Pochhammer identities, Gosper recurrence, Pfaff-Saalschutz", 30, pochhammer_suite},
        {7, "singular-vector relations, N <= 20", 10, singular_suite},
        {8, "Clifford realization", 120, clifford_realization},
        {9, "flat eigen-recurrence", 120, eigen_suite},
        {10, "Poisson kernel eigen check", 30, poisson_eigen},
        {11, "determinism of verify all --seed 42", 600, determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs <= c.budget_s;
        const bool pass = o.ok && in_time;
        failed += pass ? 0 : 1;
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, c.budget_s);
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " [" << timing
                  << (in_time ? "" : " over budget") << "] " << o.detail << std::endl;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
    return failed == 0 ? 0 : 1;
}
