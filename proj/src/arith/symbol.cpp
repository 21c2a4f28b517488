#include "spinres/arith/symbol.hpp"

#include "spinres/errors.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>
#include <vector>

namespace spinres {

namespace {

class SymbolTable {
public:
    SymbolTable() {
        intern("lambda");
        intern("n");
        intern("mu");
        for (unsigned i = 1; i <= 16; ++i) intern("x" + std::to_string(i));
        intern("alpha");
        intern("t");
    }

    std::uint32_t intern(std::string_view name) {
        std::lock_guard lock(mutex_);
        std::string key(name);
        auto it = ranks_.find(key);
        if (it != ranks_.end()) return it->second;
        auto rank = static_cast<std::uint32_t>(names_.size());
        names_.push_back(key);
        ranks_.emplace(std::move(key), rank);
        return rank;
    }

    const std::string& name(std::uint32_t rank) {
        std::lock_guard lock(mutex_);
        return names_.at(rank);
    }

private:
    std::mutex mutex_;
    std::deque<std::string> names_;  // stable references across growth
    std::unordered_map<std::string, std::uint32_t> ranks_;
};

SymbolTable& table() {
    static SymbolTable t;
    return t;
}

}  // namespace

Symbol Symbol::named(std::string_view name) {
    if (name.empty()) throw UsageError("empty symbol name");
    return Symbol(table().intern(name));
}

const std::string& Symbol::name() const { return table().name(rank_); }

std::string Symbol::latex() const {
    const std::string& s = name();
    if (s == "lambda" || s == "mu" || s == "alpha") return "\\" + s;
    if (s.size() > 1 && s[0] == 'x') return "x_{" + s.substr(1) + "}";
    return s;
}

namespace sym {
Symbol lambda() { static const Symbol s = Symbol::named("lambda"); return s; }
Symbol n() { static const Symbol s = Symbol::named("n"); return s; }
Symbol mu() { static const Symbol s = Symbol::named("mu"); return s; }
Symbol alpha() { static const Symbol s = Symbol::named("alpha"); return s; }
Symbol t() { static const Symbol s = Symbol::named("t"); return s; }
Symbol x(unsigned i) {
    if (i == 0) throw UsageError("coordinate index is 1-based");
    if (i <= 16) {
        static const auto first = [] {
            std::vector<Symbol> v;
            for (unsigned k = 1; k <= 16; ++k) v.push_back(Symbol::named("x" + std::to_string(k)));
            return v;
        }();
        return first[i - 1];
    }
    return Symbol::named("x" + std::to_string(i));
}
}  // namespace sym

}  // namespace spinres
