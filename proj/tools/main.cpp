#include "suites.hpp"

#include "spinres/errors.hpp"
#include "spinres/resfam/resfam.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace spinres;

namespace {

constexpr int kExitFailures = 1;
constexpr int kExitUsage = 2;

struct RawFlags {
    unsigned max_order = 0, boundary_dim = 0, order = 0, degree = 0, fields = 0, samples = 0, dim = 0;
    std::string signature, lambda;
};

std::pair<unsigned, unsigned> parse_signature(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--signature expects p,q");
    try {
        std::size_t used = 0;
        const std::string ps = text.substr(0, comma), qs = text.substr(comma + 1);
        const int p = std::stoi(ps, &used);
        if (used != ps.size()) throw UsageError("bad p");
        const int q = std::stoi(qs, &used);
        if (used != qs.size() || p < 0 || q < 0) throw UsageError("bad q");
        return {static_cast<unsigned>(p), static_cast<unsigned>(q)};
    } catch (const std::exception&) {
        throw UsageError("--signature expects non-negative integers p,q, got '" + text + "'");
    }
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot open --out file '" + path + "'");
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of residue-family identities for spinors"};
    app.require_subcommand(1);
    std::string out_path;

    auto* emit = app.add_subcommand("emit", "Print a closed form");
    emit->require_subcommand(1);
    auto* emit_resfam = emit->add_subcommand("resfam", "Residue family of a given order (n symbolic)");
    unsigned emit_order = 0;
    bool latex = false, json = false;
    emit_resfam->add_option("--order", emit_order, "Order N >= 0")->required();
    auto* latex_flag = emit_resfam->add_flag("--latex", latex, "LaTeX output (default)");
    emit_resfam->add_flag("--json", json, "JSON output")->excludes(latex_flag);
    emit_resfam->add_option("--out", out_path, "Write to FILE instead of stdout");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    verify->require_subcommand(1);
    RawFlags raw;
    cli::Params params;
    std::string suite;
    std::vector<std::string> names = cli::kSuites;
    names.emplace_back("all");
    for (const auto& name : names) {
        auto* sub = verify->add_subcommand(name, "verify " + name);
        sub->add_option("--max-order", raw.max_order, "Largest order");
        sub->add_option("--boundary-dim", raw.boundary_dim, "Boundary dimension m (ambient m + 1)");
        sub->add_option("--signature", raw.signature, "Clifford signature p,q");
        sub->add_option("--lambda", raw.lambda, "Spectral parameter p/q");
        sub->add_option("--order", raw.order, "Recurrence order K");
        sub->add_option("--degree", raw.degree, "Field or polynomial degree");
        sub->add_option("--fields", raw.fields, "Number of random fields");
        sub->add_option("--samples", raw.samples, "Number of random samples");
        sub->add_option("--dim", raw.dim, "Ambient dimension for the Poisson kernel");
        sub->add_option("--seed", params.seed, "Random seed");
        sub->add_option("--jobs", params.jobs, "Worker threads");
        sub->add_option("--out", out_path, "Write to FILE instead of stdout");
        sub->add_flag("--timing", params.timing, "Include wall-clock times");
        sub->callback([&suite, name] { suite = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (emit_resfam->parsed()) {
            const auto& family = resfam::resfam_explicit(emit_order);
            if (json) {
                Json j;
                j["order"] = emit_order;
                j["terms"] = family.to_json();
                write_output(j.dump(2) + "\n", out_path);
            } else {
                write_output(family.to_latex() + "\n", out_path);
            }
            return 0;
        }
        auto* sub = verify->get_subcommand(suite);
        auto take = [&](const char* flag, unsigned value, std::optional<unsigned>& into) {
            if (sub->count(flag)) into = value;
        };
        take("--max-order", raw.max_order, params.max_order);
        take("--boundary-dim", raw.boundary_dim, params.boundary_dim);
        take("--order", raw.order, params.order);
        take("--degree", raw.degree, params.degree);
        take("--fields", raw.fields, params.fields);
        take("--samples", raw.samples, params.samples);
        take("--dim", raw.dim, params.dim);
        if (sub->count("--signature")) params.signature = parse_signature(raw.signature);
        if (sub->count("--lambda")) params.lambda = raw.lambda;
        const Json report = cli::run_verify(suite, params);
        write_output(report.dump(2) + "\n", out_path);
        return cli::report_passed(report) ? 0 : kExitFailures;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionViolation& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailures;
    }
}
