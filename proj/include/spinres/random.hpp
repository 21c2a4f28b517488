#pragma once

#include "spinres/arith/rational.hpp"

#include <cstdint>
#include <random>

namespace spinres {

// Seeded generator with a portable integer mapping, so a seed yields the
// same stream under every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    // p/q with |p| <= num_bound and 1 <= q <= den_bound.
    Rational rational(std::int64_t num_bound, std::int64_t den_bound);
    // Same but never zero.
    Rational nonzero_rational(std::int64_t num_bound, std::int64_t den_bound);

    bool coin() { return (next() >> 63) != 0; }

    // Independent child stream, for handing one generator to each work item.
    Rng fork() { return Rng(next() ^ 0x9E3779B97F4A7C15ull); }

private:
    std::mt19937_64 engine_;
};

}  // namespace spinres
