#include "spinres/arith/serialize.hpp"

#include "spinres/errors.hpp"

namespace spinres {

Json to_json(const MultiPoly& p) {
    Json symbols = Json::array();
    for (Symbol s : p.symbols()) symbols.push_back(s.name());
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["re"] = to_string(c.re());
        t["im"] = to_string(c.im());
        terms.push_back(std::move(t));
    }
    Json out;
    out["symbols"] = std::move(symbols);
    out["terms"] = std::move(terms);
    return out;
}

MultiPoly multipoly_from_json(const Json& j) {
    try {
        std::vector<Symbol> symbols;
        for (const auto& s : j.at("symbols")) symbols.push_back(Symbol::named(s.get<std::string>()));
        std::vector<std::pair<Exponents, GaussianRational>> terms;
        for (const auto& t : j.at("terms")) {
            terms.emplace_back(t.at("exp").get<Exponents>(),
                               GaussianRational(parse_rational(t.at("re").get<std::string>()),
                                                parse_rational(t.at("im").get<std::string>())));
        }
        return MultiPoly::from_terms(std::move(symbols), terms);
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed polynomial JSON: ") + e.what());
    }
}

Json to_json(const RationalFunction& f) {
    Json out;
    out["num"] = to_json(f.num());
    out["den"] = to_json(f.den());
    return out;
}

RationalFunction ratfun_from_json(const Json& j) {
    try {
        return RationalFunction(multipoly_from_json(j.at("num")), multipoly_from_json(j.at("den")));
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("malformed rational function JSON: ") + e.what());
    }
}

}  // namespace spinres
