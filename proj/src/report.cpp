#include "hyperquad/report.hpp"

#include <json.hpp>

namespace hyperquad {

bool RunReport::all_pass() const {
    for (const VerdictEntry& v : verdicts)
        if (!v.pass)
            return false;
    return true;
}

void RunReport::add_verdict(std::string name, bool pass, std::string witness) {
    verdicts.push_back({std::move(name), pass, std::move(witness)});
}

std::string RunReport::to_json() const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["suite"] = suite;
    j["n"] = n;
    j["frame"] = frame;
    nlohmann::ordered_json jcounts = nlohmann::ordered_json::object();
    for (const auto& [key, value] : counts)
        jcounts[key] = value;
    j["counts"] = jcounts;
    nlohmann::ordered_json jverdicts = nlohmann::ordered_json::array();
    for (const VerdictEntry& v : verdicts) {
        nlohmann::ordered_json entry;
        entry["name"] = v.name;
        entry["pass"] = v.pass;
        entry["witness"] = v.witness;
        jverdicts.push_back(entry);
    }
    j["verdicts"] = jverdicts;
    j["wall_time"] = wall_time;
    if (seed)
        j["seed"] = *seed;
    else
        j["seed"] = nullptr;
    if (sample)
        j["sample"] = *sample;
    else
        j["sample"] = nullptr;
    j["all_pass"] = all_pass();
    return j.dump(2) + "\n";
}

} // namespace hyperquad
