#include "gradua/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace gradua {

std::string to_string(CheckStatus s) {
    switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::string to_string(Provenance p) {
    switch (p) {
    case Provenance::Paper: return "paper";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
    }
    return "?";
}

CheckStatus Report::overall() const {
    bool anyInconclusive = false;
    for (const auto& c : checks) {
        if (c.status == CheckStatus::Fail) return CheckStatus::Fail;
        if (c.status == CheckStatus::Inconclusive) anyInconclusive = true;
    }
    return anyInconclusive ? CheckStatus::Inconclusive : CheckStatus::Pass;
}

std::string emit_report(const Report& r, ReportFormat format, bool include_timings) {
    if (format == ReportFormat::Json) {
        nlohmann::ordered_json j; // insertion order; we insert sorted below
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : r.checks) {
            nlohmann::json cj;
            cj["detail"] = c.detail;
            cj["lhs"] = c.lhs;
            cj["name"] = c.name;
            cj["provenance"] = to_string(c.provenance);
            cj["rhs"] = c.rhs;
            cj["status"] = to_string(c.status);
            if (include_timings) cj["seconds"] = c.seconds;
            checks.push_back(cj);
        }
        nlohmann::json out;
        out["checks"] = checks;
        out["config"] = r.config;
        out["overall"] = to_string(r.overall());
        out["scenario"] = r.scenario;
        out["version"] = r.version;
        return out.dump(2) + "\n";
    }

    std::ostringstream os;
    os << "scenario: " << r.scenario << " (version " << r.version << ")\n";
    for (const auto& [k, v] : r.config) os << "  config " << k << " = " << v << "\n";
    size_t w = 8;
    for (const auto& c : r.checks) w = std::max(w, c.name.size());
    for (const auto& c : r.checks) {
        os << "  " << c.name << std::string(w - c.name.size() + 2, ' ')
           << to_string(c.status) << "  [" << to_string(c.provenance) << "]  lhs=" << c.lhs
           << " rhs=" << c.rhs;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        if (include_timings) os << "  " << c.seconds << "s";
        os << "\n";
    }
    os << "overall: " << to_string(r.overall()) << "\n";
    return os.str();
}

} // namespace gradua
