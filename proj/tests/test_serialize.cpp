#include <doctest.h>

#include "qgrass/enumerate.hpp"
#include "qgrass/harness.hpp"
#include "qgrass/serialize.hpp"

using namespace qgrass;

namespace {

EnumerationBudget budget{uint64_t(1) << 26};

Family sample_family() {
    const FieldSpec& f = make_field(2);
    Flag flag = build_flag(6, f, {3}, 11);
    return build_h3(flag.at_dim(3), 1, 3, budget);
}

}  // namespace

TEST_CASE("subspace json round trip is bit exact") {
    const FieldSpec& f = make_field(3);
    Subspace s = canonicalize({{1, 0, 2, 1}, {0, 1, 1, 2}}, f, 4);
    auto j = subspace_to_json(s);
    CHECK(j["n"] == 4);
    CHECK(j["q"] == 3);
    CHECK(j["dim"] == 2);
    Subspace back = subspace_from_json(j);
    CHECK(back == s);
    CHECK(back.raw() == s.raw());
}

TEST_CASE("subspace json rejects malformed input") {
    auto good = subspace_to_json(canonicalize({{1, 0}, {0, 1}}, make_field(2), 2));
    {
        auto bad = good;
        bad["rows"][0][0] = 5;  // out of field range
        CHECK_THROWS_AS(subspace_from_json(bad), std::invalid_argument);
    }
    {
        auto bad = good;
        bad["dim"] = 1;
        CHECK_THROWS_AS(subspace_from_json(bad), std::invalid_argument);
    }
    {
        // rows spanning the right space but not in canonical form
        auto bad = good;
        bad["rows"] = nlohmann::json::array({{1, 1}, {0, 1}});
        CHECK_THROWS_AS(subspace_from_json(bad), std::invalid_argument);
    }
}

TEST_CASE("family json round trip preserves members and provenance") {
    Family fam = sample_family();
    auto j = family_to_json(fam);
    Family back = family_from_json(j);
    CHECK(back == fam);
    CHECK(back.construction() == Construction::H3);
    CHECK(back.defining().size() == 1);
    CHECK(back.defining()[0] == fam.defining()[0]);
}

TEST_CASE("family binary round trip is bit exact") {
    Family fam = sample_family();
    auto bytes = family_to_binary(fam);
    Family back = family_from_binary(bytes);
    CHECK(back == fam);
    CHECK(family_to_binary(back) == bytes);

    auto truncated = bytes;
    truncated.resize(bytes.size() - 3);
    CHECK_THROWS_AS(family_from_binary(truncated), std::invalid_argument);

    auto corrupted = bytes;
    corrupted[0] = 'X';
    CHECK_THROWS_AS(family_from_binary(corrupted), std::invalid_argument);
}

TEST_CASE("family files round trip through disk") {
    Family fam = sample_family();
    std::string jpath = "roundtrip_family.json";
    std::string bpath = "roundtrip_family.bin";
    save_family(fam, jpath, false);
    save_family(fam, bpath, true);
    CHECK(load_family(jpath) == fam);
    CHECK(load_family(bpath) == fam);
    std::remove(jpath.c_str());
    std::remove(bpath.c_str());
}

TEST_CASE("loading re-validates family invariants") {
    Family fam = sample_family();
    auto j = family_to_json(fam);
    {
        auto bad = j;
        bad["members"][0] = bad["members"][1];  // duplicate member
        CHECK_THROWS_AS(family_from_json(bad), std::invalid_argument);
    }
    {
        auto bad = j;
        bad["params"]["k"] = 2;  // members no longer have dimension k
        CHECK_THROWS_AS(family_from_json(bad), std::invalid_argument);
    }
    {
        auto bad = j;
        bad["params"]["q"] = 3;  // members live over the wrong field
        CHECK_THROWS_AS(family_from_json(bad), std::invalid_argument);
    }
}

TEST_CASE("schema validator accepts real reports and rejects broken ones") {
    Campaign c;
    c.id = "schema-test";
    c.checks = {"identities"};
    c.formula_grid.qs = {2};
    c.formula_grid.t_max = 1;
    c.formula_grid.k_max = 3;
    c.formula_grid.n_max = 8;
    Report report = run_campaign(c);

    auto schema = report_schema();
    std::string err;
    CHECK(matches_schema(report.to_json(), schema, &err));

    auto broken = report.to_json();
    broken.erase("summary");
    CHECK(!matches_schema(broken, schema, &err));
    CHECK(!err.empty());

    auto wrong_status = report.to_json();
    wrong_status["records"][0]["status"] = "maybe";
    CHECK(!matches_schema(wrong_status, schema, &err));
}
