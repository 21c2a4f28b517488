#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace spinres {

// Interned formal symbol. Comparison follows the global order
// lambda < n < mu < x1 < x2 < ... < x16 < alpha < t, followed by any
// further symbols in order of first use.
class Symbol {
public:
    static Symbol named(std::string_view name);

    const std::string& name() const;
    std::string latex() const;
    std::uint32_t rank() const { return rank_; }

    friend auto operator<=>(Symbol a, Symbol b) = default;

private:
    explicit Symbol(std::uint32_t rank) : rank_(rank) {}
    std::uint32_t rank_;
};

namespace sym {
Symbol lambda();
Symbol n();
Symbol mu();
Symbol alpha();
Symbol t();
// Coordinate x_i, 1-based.
Symbol x(unsigned i);
}  // namespace sym

}  // namespace spinres
