#pragma once

#include "spinres/arith/ratfun.hpp"

#include <json.hpp>

namespace spinres {

using Json = nlohmann::ordered_json;

// {"symbols":[...],"terms":[{"exp":[...],"re":"p/q","im":"p/q"}, ...]}
// with terms in graded-lex order, leading term first.
Json to_json(const MultiPoly& p);
MultiPoly multipoly_from_json(const Json& j);

// {"num":<MultiPoly>,"den":<MultiPoly>}
Json to_json(const RationalFunction& f);
RationalFunction ratfun_from_json(const Json& j);

}  // namespace spinres
