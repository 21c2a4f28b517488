#pragma once

#include "spinres/arith/serialize.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace spinres::cli {

// Flags shared by the verify subcommands. Unset fields take per-suite defaults.
struct Params {
    std::optional<unsigned> max_order;
    std::optional<unsigned> boundary_dim;
    std::optional<std::pair<unsigned, unsigned>> signature;
    std::optional<std::string> lambda;
    std::optional<unsigned> order;
    std::optional<unsigned> degree;
    std::optional<unsigned> fields;
    std::optional<unsigned> samples;
    std::optional<unsigned> dim;
    std::uint64_t seed = 1;
    unsigned jobs = 1;
    bool timing = false;
};

extern const std::vector<std::string> kSuites;

// Full verification report for one suite, or every suite for "all".
// Throws UsageError on invalid parameter combinations.
Json run_verify(const std::string& suite, const Params& params);

// Exit status implied by a report from run_verify.
bool report_passed(const Json& report);

}  // namespace spinres::cli
