#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hyperquad {

struct VerdictEntry {
    std::string name;
    bool pass = false;
    std::string witness; // empty when the verdict passes
};

/// Outcome of one CLI run: echo of the command, relation-labeled counts in
/// insertion order, named verdicts, and timing. Serialized with a stable key
/// order so reruns differ at most in wall_time.
struct RunReport {
    std::string command;
    std::string suite;
    int n = 0;
    std::string frame = "standard";
    std::vector<std::pair<std::string, std::uint64_t>> counts;
    std::vector<VerdictEntry> verdicts;
    double wall_time = 0.0;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> sample;

    bool all_pass() const;
    void add_verdict(std::string name, bool pass, std::string witness = "");
    std::string to_json() const;
};

} // namespace hyperquad
