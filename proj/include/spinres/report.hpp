#pragma once

#include "spinres/arith/serialize.hpp"

#include <string>
#include <vector>

namespace spinres {

struct Failure {
    std::string key;
    std::string diff;
};

// Outcome of checking one family of instances, such as the cases of one
// identity. Everything in it is deterministic for fixed inputs.
struct CheckReport {
    std::string name;
    std::size_t instances = 0;
    std::vector<Failure> failures;
    Json info = Json::object();

    CheckReport() = default;
    explicit CheckReport(std::string n) : name(std::move(n)) {}

    bool passed() const { return failures.empty(); }

    // Counts one instance and stores a failure when !ok.
    template <class DiffFn>
    void record(const std::string& key, bool ok, DiffFn&& diff) {
        ++instances;
        if (!ok) failures.push_back({key, diff()});
    }
    void record(const std::string& key, bool ok) {
        record(key, ok, [] { return std::string("mismatch"); });
    }

    void merge(const CheckReport& other);

    Json to_json() const;
};

}  // namespace spinres
