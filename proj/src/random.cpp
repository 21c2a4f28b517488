#include "spinres/random.hpp"

#include "spinres/errors.hpp"

#include <limits>

namespace spinres {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw UsageError("empty random range");
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    if (span == 0) return static_cast<std::int64_t>(next());
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % span);
    std::uint64_t draw;
    do {
        draw = next();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

Rational Rng::rational(std::int64_t num_bound, std::int64_t den_bound) {
    std::int64_t p = uniform(-num_bound, num_bound);
    std::int64_t q = uniform(1, den_bound);
    return make_rational(p, q);
}

Rational Rng::nonzero_rational(std::int64_t num_bound, std::int64_t den_bound) {
    Rational r;
    do {
        r = rational(num_bound, den_bound);
    } while (sgn(r) == 0);
    return r;
}

}  // namespace spinres
