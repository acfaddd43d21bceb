#include "hyperdom/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace hyperdom {

void VerificationReport::absorb(const std::string& prefix, const VerificationReport& other) {
    for (const Check& c : other.checks) checks.push_back({prefix + "/" + c.name, c.holds, c.details});
    if (!other.findings.empty()) findings[prefix] = other.findings;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.holds; });
}

nlohmann::json VerificationReport::to_json(bool with_timing) const {
    nlohmann::json cs = nlohmann::json::array();
    for (const Check& c : checks) cs.push_back({{"name", c.name}, {"holds", c.holds}, {"details", c.details}});
    nlohmann::json out = {
        {"command", command}, {"inputs", inputs}, {"checks", cs}, {"findings", findings}, {"verdict", verdict()}};
    if (with_timing) out["elapsed_ms"] = elapsed_ms;
    return out;
}

std::string VerificationReport::to_text(bool with_timing) const {
    std::ostringstream os;
    os << "command: " << command << '\n';
    if (!inputs.empty()) os << "inputs: " << inputs.dump() << '\n';
    int failed = 0;
    for (const Check& c : checks) {
        failed += !c.holds;
        os << (c.holds ? "  PASS  " : "  FAIL  ") << c.name;
        if (!c.details.empty()) os << "  " << c.details.dump();
        os << '\n';
    }
    if (!findings.empty()) {
        os << "findings:\n";
        for (const auto& [key, value] : findings.items()) os << "  " << key << ": " << value.dump() << '\n';
    }
    os << "verdict: " << verdict() << " (" << checks.size() << " checks, " << failed << " failed)";
    if (with_timing) os << " in " << std::fixed << std::setprecision(1) << elapsed_ms << " ms";
    os << '\n';
    return os.str();
}

}  // namespace hyperdom
