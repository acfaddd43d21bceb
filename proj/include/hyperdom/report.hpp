#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace hyperdom {

struct Check {
    std::string name;
    bool holds = false;
    nlohmann::json details;
};

/// Outcome of one CLI command. The verdict is PASS only when every check
/// holds. `elapsed_ms` is the only field that varies between identical runs.
struct VerificationReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    std::vector<Check> checks;
    nlohmann::json findings = nlohmann::json::object();
    double elapsed_ms = 0;

    void add(std::string name, bool holds, nlohmann::json details = nlohmann::json::object()) {
        checks.push_back({std::move(name), holds, std::move(details)});
    }

    /// Appends another report's checks under "<prefix>/" and its findings
    /// under findings[prefix].
    void absorb(const std::string& prefix, const VerificationReport& other);

    bool passed() const;
    std::string verdict() const { return passed() ? "PASS" : "FAIL"; }

    nlohmann::json to_json(bool with_timing = true) const;
    std::string to_text(bool with_timing = true) const;
};

}  // namespace hyperdom
