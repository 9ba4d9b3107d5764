#include <doctest.h>

#include <unordered_set>

#include "oracles.hpp"
#include "qgrass/enumerate.hpp"

using namespace qgrass;

TEST_CASE("grassmannian stream length matches the count formula") {
    EnumerationBudget budget;
    const FieldSpec& f2 = make_field(2);

    uint64_t count = 0;
    std::unordered_set<Subspace, SubspaceHash> seen;
    enumerate_grassmannian(4, 2, f2, budget, [&](const Subspace& s) {
        ++count;
        CHECK(s.dim() == 2);
        seen.insert(s);
        return true;
    });
    CHECK(count == 35);
    CHECK(seen.size() == 35);
    CHECK(oracle::all_subspaces(4, 2, 2).size() == 35);

    count = 0;
    enumerate_grassmannian(9, 3, f2, budget, [&](const Subspace&) {
        ++count;
        return true;
    });
    CHECK(count == 788035);
}

TEST_CASE("degenerate dimensions") {
    EnumerationBudget budget;
    const FieldSpec& f = make_field(3);
    std::vector<Subspace> all = collect_grassmannian(5, 0, f, budget);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == Subspace::zero(5, f));
    CHECK(collect_grassmannian(5, 6, f, budget).empty());
    CHECK(collect_grassmannian(5, 5, f, budget).size() == 1);
}

TEST_CASE("stream is complete and duplicate-free at small sizes") {
    EnumerationBudget budget;
    for (int q : {2, 3}) {
        int n_max = q == 2 ? 6 : 4;
        const FieldSpec& f = make_field(q);
        for (int n = 0; n <= n_max; ++n) {
            for (int k = 0; k <= n; ++k) {
                std::unordered_set<Subspace, SubspaceHash> seen;
                uint64_t count = 0;
                enumerate_grassmannian(n, k, f, budget, [&](const Subspace& s) {
                    ++count;
                    seen.insert(s);
                    return true;
                });
                ExactInt expected = gauss_binom(n, k, q);
                CHECK(cmp(expected, count) == 0);
                CHECK(seen.size() == count);
            }
        }
    }
}

TEST_CASE("budget violations are rejected up front") {
    EnumerationBudget tiny{100};
    const FieldSpec& f = make_field(2);
    CHECK_THROWS_AS(collect_grassmannian(9, 3, f, tiny), BudgetExceeded);
    // a stream within budget still works
    CHECK(collect_grassmannian(4, 1, f, tiny).size() == 15);
}

TEST_CASE("early stop halts the walk") {
    EnumerationBudget budget;
    const FieldSpec& f = make_field(2);
    uint64_t count = 0;
    enumerate_grassmannian(6, 2, f, budget, [&](const Subspace&) { return ++count < 10; });
    CHECK(count == 10);
}

TEST_CASE("subspaces of a fixed space") {
    EnumerationBudget budget;
    const FieldSpec& f = make_field(2);
    Subspace M = canonicalize({{1, 0, 0, 0, 1}, {0, 1, 0, 0, 1}, {0, 0, 1, 0, 0}}, f, 5);
    REQUIRE(M.dim() == 3);
    auto planes = collect_subspaces_of(M, 2, budget);
    CHECK(planes.size() == 7);  // [3, 2]_2
    std::unordered_set<Subspace, SubspaceHash> seen(planes.begin(), planes.end());
    CHECK(seen.size() == planes.size());
    for (const auto& p : planes) {
        CHECK(p.dim() == 2);
        CHECK(space_contains(M, p));
    }
}

TEST_CASE("superspaces of a fixed space") {
    EnumerationBudget budget;
    const FieldSpec& f = make_field(2);
    Subspace S = canonicalize({{1, 1, 0, 0, 0}}, f, 5);
    auto supers = collect_superspaces_of(S, 2, budget);
    CHECK(supers.size() == 15);  // [4, 1]_2
    std::unordered_set<Subspace, SubspaceHash> seen(supers.begin(), supers.end());
    CHECK(seen.size() == supers.size());
    for (const auto& T : supers) {
        CHECK(T.dim() == 2);
        CHECK(space_contains(T, S));
    }
    // completeness against the full stream
    uint64_t containing = 0;
    enumerate_grassmannian(5, 2, f, budget, [&](const Subspace& T) {
        if (space_contains(T, S)) ++containing;
        return true;
    });
    CHECK(containing == supers.size());

    // d = dim S returns the space itself; d below returns nothing
    auto self = collect_superspaces_of(S, 1, budget);
    REQUIRE(self.size() == 1);
    CHECK(self[0] == S);
    CHECK(collect_superspaces_of(S, 0, budget).empty());
}
