#include "ordfield/probe_report.hpp"

#include <json.hpp>

namespace ordfield {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Witness: return "Witness";
        case Verdict::CounterexampleShown: return "CounterexampleShown";
        default: return "Inconclusive";
    }
}

std::string ProbeReport::to_text() const {
    std::string w;
    if (witnesses.empty()) {
        w = "-";
    } else {
        for (std::size_t i = 0; i < witnesses.size(); ++i) {
            if (i) w += ", ";
            w += witnesses[i];
        }
    }
    std::string s =
        "probe: " + name + " / verdict: " + to_string(verdict) + " / witness: " + w + "\n";
    for (const auto& line : trace) s += line + "\n";
    return s;
}

std::string ProbeReport::to_json() const {
    nlohmann::ordered_json j;
    j["probe"] = name;
    j["verdict"] = to_string(verdict);
    j["witness"] = witnesses;
    j["trace"] = trace;
    return j.dump(2) + "\n";
}

}  // namespace ordfield
