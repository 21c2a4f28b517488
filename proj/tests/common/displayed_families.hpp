#pragma once

#include "spinres/opalgebra/opalgebra.hpp"

#include <vector>

namespace spinres::testdata {

// The residue families of orders 1..4, typed in term by term (n symbolic).
inline std::vector<op::OpPoly> displayed_families() {
    const MultiPoly L = MultiPoly::variable(sym::lambda());
    const MultiPoly Nn = MultiPoly::variable(sym::n());
    auto word = [](unsigned eps, unsigned a, unsigned b, const RationalFunction& c = RationalFunction(1)) {
        return op::OpPoly(op::OpMonomial{eps, a, b, true}, c);
    };
    auto lin = [&](long k) { return RationalFunction(2 * L + Nn - k); };
    const RationalFunction third(make_rational(1, 3));
    return {
        word(1, 1, 0) - word(1, 0, 1, lin(2)),
        word(0, 2, 0) - word(0, 1, 1, RationalFunction(2)) - word(0, 0, 2, lin(4)),
        word(1, 3, 0) - word(1, 2, 1, lin(4)) - word(1, 1, 2, lin(4)) + word(1, 0, 3, third * lin(6) * lin(4)),
        word(0, 4, 0) - word(0, 3, 1, RationalFunction(4)) + word(0, 1, 3, RationalFunction(make_rational(4, 3)) * lin(6)) -
            word(0, 2, 2, RationalFunction(2) * lin(6)) + word(0, 0, 4, third * lin(8) * lin(6)),
    };
}

}  // namespace spinres::testdata
