#include <doctest.h>

#include "qgrass/harness.hpp"

using namespace qgrass;

namespace {

Campaign small_formula_campaign() {
    Campaign c;
    c.id = "small";
    c.checks = {"identities", "inequalities", "dichotomy"};
    c.formula_grid.qs = {2, 3};
    c.formula_grid.t_max = 3;
    c.formula_grid.k_max = 6;
    c.formula_grid.n_max = 20;
    return c;
}

}  // namespace

TEST_CASE("formula-level campaign passes with no failures") {
    Report report = run_campaign(small_formula_campaign());
    CHECK(report.ok());
    CHECK(report.count(CheckStatus::Pass) > 100);
    CHECK(report.campaign_id == "small");
    CHECK(report.version == kToolkitVersion);
    CHECK(!report.timestamp.empty());
}

TEST_CASE("identical campaigns give byte-identical reports modulo timing") {
    Campaign c = small_formula_campaign();
    Report a = run_campaign(c);
    Report b = run_campaign(c);
    CHECK(a.normalized().to_json().dump() == b.normalized().to_json().dump());
    CHECK(a.normalized().to_csv() == b.normalized().to_csv());
}

TEST_CASE("every skip carries a machine-readable reason") {
    Report report = run_campaign(small_formula_campaign());
    size_t skips = 0;
    for (const auto& r : report.records) {
        if (r.status == CheckStatus::Skip) {
            ++skips;
            CHECK(!r.reason.empty());
        }
    }
    // the sweep domain includes points outside individual hypotheses
    CHECK(skips > 0);
    CHECK(report.records.size() ==
          report.count(CheckStatus::Pass) + report.count(CheckStatus::Fail) + report.count(CheckStatus::Skip));
}

TEST_CASE("known narrow hypotheses produce the expected skips") {
    Report report = run_campaign(small_formula_campaign());
    bool found_h1_upper_skip = false;
    for (const auto& r : report.records) {
        if (r.check == "ineq/h1-upper" && r.status == CheckStatus::Skip && r.t && r.k &&
            *r.t == *r.k - 2)
            found_h1_upper_skip = true;
    }
    CHECK(found_h1_upper_skip);
}

TEST_CASE("size checks at desk scale agree with the closed forms") {
    Campaign c;
    c.id = "sizes";
    c.checks = {"sizes"};
    c.enum_grid = {{2, 6, 3}, {3, 6, 3}};
    Report report = run_campaign(c);
    CHECK(report.ok());
    // h1, h3 and each admissible c of h2 at (q=2, n=6, k=3, t=1) and (q=3, ...)
    CHECK(report.count(CheckStatus::Pass) >= 10);
}

TEST_CASE("unsupported field orders in the grid are skipped, not failed") {
    Campaign c;
    c.id = "unsupported";
    c.checks = {"sizes"};
    c.enum_grid = {{6, 6, 3}};
    Report report = run_campaign(c);
    CHECK(report.ok());
    CHECK(report.count(CheckStatus::Skip) == report.records.size());
    CHECK(report.count(CheckStatus::Skip) > 0);
}

TEST_CASE("budget pressure turns checks into skips") {
    Campaign c;
    c.id = "tight";
    c.checks = {"sizes"};
    c.enum_grid = {{2, 9, 3}};
    c.budget = 50;  // far below any construction at n = 9
    Report report = run_campaign(c);
    CHECK(report.ok());
    for (const auto& r : report.records) {
        if (r.status == CheckStatus::Skip) CHECK(r.reason == "over-budget");
    }
    CHECK(report.count(CheckStatus::Skip) > 0);
}

TEST_CASE("fixtures can pin results and deliberately wrong fixtures fail") {
    Campaign c;
    c.id = "fixtures";
    c.checks = {};
    c.fixtures.push_back({"qbinom", "", 4, 2, 2, 0, 0, 0, 0, "35"});
    c.fixtures.push_back({"size", "h3", 0, 0, 2, 9, 3, 1, 0, "883"});
    Report good = run_campaign(c);
    CHECK(good.ok());
    CHECK(good.records.size() == 2);

    c.fixtures.push_back({"qbinom", "", 4, 2, 2, 0, 0, 0, 0, "36"});
    Report bad = run_campaign(c);
    CHECK(!bad.ok());
    CHECK(bad.count(CheckStatus::Fail) == 1);
}

TEST_CASE("campaign configs round trip through json") {
    Campaign c = Campaign::desk_default();
    c.fixtures.push_back({"size", "h2", 0, 0, 2, 9, 3, 1, 5, "419"});
    Campaign back = Campaign::from_json(nlohmann::json::parse(c.to_json().dump()));
    CHECK(back.id == c.id);
    CHECK(back.checks == c.checks);
    CHECK(back.budget == c.budget);
    CHECK(back.seed == c.seed);
    CHECK(back.enum_grid.size() == c.enum_grid.size());
    CHECK(back.structure_points.size() == c.structure_points.size());
    CHECK(back.fixtures.size() == 1);
    CHECK(back.fixtures[0].expected == "419");
}

TEST_CASE("csv output has one line per record plus a header") {
    Report report = run_campaign(small_formula_campaign());
    std::string csv = report.to_csv();
    size_t lines = std::count(csv.begin(), csv.end(), '\n');
    CHECK(lines == report.records.size() + 1);
    CHECK(csv.rfind("campaign,check,q,n,k,t,c,expected,actual,pass,ms,reason,params", 0) == 0);
}

TEST_CASE("structure checks pass at the small desk point") {
    Campaign c;
    c.id = "structure-small";
    c.checks = {"structure"};
    c.structure_points = {{2, 6, 3, 1}};
    c.budget = uint64_t(1) << 26;
    Report report = run_campaign(c);
    CHECK(report.ok());
    bool saw_tau = false, saw_rebuild = false, saw_maximal = false;
    for (const auto& r : report.records) {
        if (r.check == "structure/tau") saw_tau = true;
        if (r.check == "structure/rebuild") saw_rebuild = true;
        if (r.check == "structure/maximal") saw_maximal = true;
    }
    CHECK(saw_tau);
    CHECK(saw_rebuild);
    CHECK(saw_maximal);
}
