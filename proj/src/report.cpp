#include "spinres/report.hpp"

namespace spinres {

void CheckReport::merge(const CheckReport& other) {
    instances += other.instances;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
}

Json CheckReport::to_json() const {
    Json out;
    out["name"] = name;
    out["instances"] = instances;
    Json fs = Json::array();
    for (const auto& f : failures) fs.push_back({{"key", f.key}, {"diff", f.diff}});
    out["failures"] = std::move(fs);
    if (!info.empty()) out["info"] = info;
    return out;
}

}  // namespace spinres
