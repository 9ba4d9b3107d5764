#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qgrass/counts.hpp"
#include "qgrass/enumerate.hpp"

namespace qgrass {

inline constexpr const char* kToolkitVersion = "0.1.0";

// Wide grid for formula-level sweeps (no enumeration).
struct FormulaGrid {
    std::vector<int> qs{2, 3, 4, 5};
    int t_max = 6;
    int k_max = 10;
    int n_max = 40;
};

// Desk-scale limits for per-field exhaustive enumeration.
struct EnumGridEntry {
    int q;
    int n_max;
    int k_max;
};

struct GrassmannianGridEntry {
    int q;
    int n_max;
};

struct StructurePoint {
    int q;
    int n;
    int k;
    int t;
};

// Externally supplied expected value; lets a campaign config pin (or
// deliberately contradict) a result.
struct Fixture {
    std::string kind;    // "qbinom" | "size"
    std::string family;  // for kind "size": h1 | h2 | h3
    long a = 0, b = 0;   // for kind "qbinom"
    int q = 2, n = 0, k = 0, t = 0, c = 0;
    std::string expected;
};

struct Campaign {
    std::string id = "campaign";
    // suites to run, in this fixed order:
    //   identities, sizes, counts, grassmannian, inequalities, structure,
    //   dichotomy, fixtures
    std::vector<std::string> checks{"identities", "sizes",     "counts",   "grassmannian",
                                    "inequalities", "structure", "dichotomy"};
    FormulaGrid formula_grid;
    std::vector<EnumGridEntry> enum_grid{{2, 9, 4}, {3, 6, 3}};
    std::vector<GrassmannianGridEntry> grassmannian_grid{{2, 10}, {3, 6}};
    std::vector<StructurePoint> structure_points{{2, 8, 3, 1}, {2, 9, 3, 1}};
    uint64_t budget = EnumerationBudget::kDefault;
    uint64_t seed = 0;
    int thread_count = 0;  // 0 = hardware concurrency
    std::vector<Fixture> fixtures;

    EnumerationBudget budget_as_limit() const { return EnumerationBudget{budget}; }

    static Campaign desk_default();
    static Campaign from_json(const nlohmann::json& j);
    nlohmann::ordered_json to_json() const;
};

enum class CheckStatus { Pass, Fail, Skip };

std::string status_name(CheckStatus s);

struct CheckRecord {
    std::string check;
    std::optional<int> q, n, k, t, c;
    std::string params;    // extra parameters, "key=value" pairs
    std::string expected;  // exact integer, sign pattern, or structured text
    std::string actual;
    CheckStatus status = CheckStatus::Pass;
    std::string reason;  // machine-readable skip reason
    int64_t ms = 0;
};

struct Report {
    std::string campaign_id;
    std::string version = kToolkitVersion;
    std::string timestamp;
    std::vector<CheckRecord> records;

    size_t count(CheckStatus s) const;
    bool ok() const { return count(CheckStatus::Fail) == 0; }

    nlohmann::ordered_json to_json() const;
    std::string to_csv() const;

    // copy with timestamp and per-record timings cleared, for byte-level
    // determinism comparisons
    Report normalized() const;
};

Report run_campaign(const Campaign& campaign);

void run_identity_checks(const Campaign& campaign, Report& report);
void run_size_checks(const Campaign& campaign, Report& report);
void run_count_checks(const Campaign& campaign, Report& report);
void run_grassmannian_checks(const Campaign& campaign, Report& report);
void run_inequality_sweeps(const Campaign& campaign, Report& report);
void run_structure_checks(const Campaign& campaign, Report& report);
void run_theorem_dichotomy(const Campaign& campaign, Report& report);
void run_fixture_checks(const Campaign& campaign, Report& report);

// The schema the JSON report validates against (also bundled at
// share/report.schema.json).
nlohmann::json report_schema();

}  // namespace qgrass
