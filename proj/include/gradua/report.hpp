#ifndef GRADUA_REPORT_HPP
#define GRADUA_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace gradua {

inline constexpr const char* kToolVersion = "0.1.0";

enum class CheckStatus { Pass, Fail, Inconclusive };
enum class Provenance { Paper, Trivial, Derived };

std::string to_string(CheckStatus s);
std::string to_string(Provenance p);

struct CheckResult {
    std::string name;
    std::string lhs;
    std::string rhs;
    CheckStatus status = CheckStatus::Fail;
    Provenance provenance = Provenance::Derived;
    std::string detail;
    double seconds = 0; // excluded from canonical serializations
};

struct Report {
    std::string scenario;
    std::string version = kToolVersion;
    std::map<std::string, std::string> config;
    std::vector<CheckResult> checks;

    CheckStatus overall() const;
    bool all_pass() const { return overall() == CheckStatus::Pass; }
};

enum class ReportFormat { Json, TextTable };

/// Canonical serialization: UTF-8, sorted keys, no trailing whitespace, and
/// no timing data, so identical runs emit identical bytes. Timings are
/// opt-in and non-canonical.
std::string emit_report(const Report& r, ReportFormat format, bool include_timings = false);

} // namespace gradua

#endif
