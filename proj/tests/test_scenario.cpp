#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "gradua/error.hpp"
#include "gradua/report.hpp"
#include "gradua/scenario.hpp"

using namespace gradua;

TEST_CASE("empty report is valid JSON with overall pass") {
    Report r;
    r.scenario = "empty";
    CHECK(r.overall() == CheckStatus::Pass);
    std::string j = emit_report(r, ReportFormat::Json);
    CHECK(j.find("\"overall\": \"pass\"") != std::string::npos);
    CHECK(j.find("\"scenario\": \"empty\"") != std::string::npos);
}

TEST_CASE("no trailing whitespace in canonical output") {
    Report r;
    r.scenario = "t";
    CheckResult c;
    c.name = "x";
    c.status = CheckStatus::Pass;
    r.checks.push_back(c);
    for (auto fmt : {ReportFormat::Json, ReportFormat::TextTable}) {
        std::string s = emit_report(r, fmt);
        std::istringstream is(s);
        std::string line;
        while (std::getline(is, line)) {
            if (line.empty()) continue;
            CHECK(line.back() != ' ');
            CHECK(line.back() != '\t');
        }
    }
}

TEST_CASE("inconclusive never silently passes") {
    Report r;
    CheckResult c;
    c.status = CheckStatus::Inconclusive;
    r.checks.push_back(c);
    CHECK(r.overall() == CheckStatus::Inconclusive);
    c.status = CheckStatus::Fail;
    r.checks.push_back(c);
    CHECK(r.overall() == CheckStatus::Fail);
}

TEST_CASE("q8 scenario passes and carries the expected check names") {
    auto rep = run_scenario("q8");
    CHECK(rep.all_pass());
    std::vector<std::string> names;
    for (const auto& c : rep.checks) names.push_back(c.name);
    for (const char* want :
         {"omega4_periodicity", "ring_presentation", "injective_hull_shift", "serre_shift"})
        CHECK(std::find(names.begin(), names.end(), want) != names.end());
}

TEST_CASE("dvr scenario: commutant n and restricted rank n^2") {
    ScenarioParams p;
    p.n_max = 2;
    auto rep = run_scenario("dvr", p);
    CHECK(rep.all_pass());
    bool sawCommutant = false, sawRestricted = false;
    for (const auto& c : rep.checks) {
        if (c.name == "commutant_dim_n2") {
            CHECK(c.lhs == "2");
            sawCommutant = true;
        }
        if (c.name == "restricted_end_rank_n2") {
            CHECK(c.lhs == "4");
            sawRestricted = true;
        }
    }
    CHECK(sawCommutant);
    CHECK(sawRestricted);
}

TEST_CASE("reports are deterministic: same seed gives identical bytes") {
    ScenarioParams p;
    p.trials = 3;
    auto r1 = run_scenario("ar_suite", p);
    auto r2 = run_scenario("ar_suite", p);
    CHECK(emit_report(r1, ReportFormat::Json) == emit_report(r2, ReportFormat::Json));
    CHECK(emit_report(r1, ReportFormat::TextTable) == emit_report(r2, ReportFormat::TextTable));
}

TEST_CASE("unknown scenario is a usage error") {
    CHECK_THROWS_AS(run_scenario("nope"), Error);
}
