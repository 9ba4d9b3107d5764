#include <doctest.h>

#include <random>

#include "qgrass/counts.hpp"
#include "qgrass/family.hpp"

using namespace qgrass;

namespace {

EnumerationBudget budget{uint64_t(1) << 26};

Family make_h1(int q, int n, int k, int t, uint64_t seed = 0) {
    const FieldSpec& f = make_field(q);
    Flag flag = build_flag(n, f, {t, k + 1}, seed);
    return build_h1(flag.at_dim(t), flag.at_dim(k + 1), t, k, budget);
}

Family make_h2(int q, int n, int k, int t, int c, uint64_t seed = 0) {
    const FieldSpec& f = make_field(q);
    if (c == n) {
        Flag flag = build_flag(n, f, {t, k}, seed);
        return build_h2(flag.at_dim(t), flag.at_dim(k), Subspace::full(n, f), t, k, budget);
    }
    Flag flag = build_flag(n, f, {t, k, c}, seed);
    return build_h2(flag.at_dim(t), flag.at_dim(k), flag.at_dim(c), t, k, budget);
}

Family make_h3(int q, int n, int k, int t, uint64_t seed = 0) {
    const FieldSpec& f = make_field(q);
    Flag flag = build_flag(n, f, {t + 2}, seed);
    return build_h3(flag.at_dim(t + 2), t, k, budget);
}

Family star_family(int q, int n, int k, const Subspace& X) {
    std::vector<Subspace> members;
    enumerate_superspaces_of(X, k, budget, [&](const Subspace& F) {
        members.push_back(F);
        return true;
    });
    return Family({n, k, X.dim(), q}, Construction::Custom, {X}, std::move(members));
}

}  // namespace

TEST_CASE("h1 enumerated sizes match the closed form") {
    Family fam9 = make_h1(2, 9, 3, 1);
    CHECK(fam9.size() == 883);
    CHECK(cmp(h1_size(1, 3, 9, 2), fam9.size()) == 0);

    Family fam6 = make_h1(2, 6, 3, 1);
    CHECK(fam6.size() == 99);
    CHECK(cmp(h1_size(1, 3, 6, 2), fam6.size()) == 0);

    // every k-subspace of the defining (k+1)-space is a member
    const Subspace& M = fam6.defining()[1];
    enumerate_subspaces_of(M, 3, budget, [&](const Subspace& F) {
        CHECK(fam6.contains_member(F));
        return true;
    });
}

TEST_CASE("h1 rejects malformed flags") {
    const FieldSpec& f = make_field(2);
    Flag flag = build_flag(9, f, {1, 4}, 0);
    CHECK_THROWS_AS(build_h1(flag.at_dim(1), flag.at_dim(4), 1, 4, budget), std::invalid_argument);
    CHECK_THROWS_AS(build_h1(flag.at_dim(4), flag.at_dim(1), 1, 3, budget), std::invalid_argument);
    Flag disjoint = build_flag(9, f, {1}, 1);
    Flag other = build_flag(9, f, {4}, 2);
    // X not inside M
    if (!space_contains(other.at_dim(4), disjoint.at_dim(1)))
        CHECK_THROWS_AS(build_h1(disjoint.at_dim(1), other.at_dim(4), 1, 3, budget),
                        std::invalid_argument);
}

TEST_CASE("h2 enumerated sizes and part sizes match the closed forms") {
    Family fam = make_h2(2, 9, 3, 1, 5);
    CHECK(fam.size() == 419);
    H2Addends want = h2_addends(1, 3, 5, 9, 2);
    CHECK(cmp(want.a, fam.count_tag(H2Part::A)) == 0);
    CHECK(cmp(want.b, fam.count_tag(H2Part::B)) == 0);
    CHECK(cmp(want.c, fam.count_tag(H2Part::C)) == 0);
    CHECK(fam.count_tag(H2Part::B) == 16);
    // the parts partition the family
    CHECK(fam.count_tag(H2Part::A) + fam.count_tag(H2Part::B) + fam.count_tag(H2Part::C) == fam.size());

    Family top = make_h2(2, 9, 3, 1, 9);
    CHECK(top.size() == 883);
    CHECK(top.count_tag(H2Part::B) == 0);

    CHECK_THROWS_AS(make_h2(2, 9, 3, 1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_h2(2, 9, 3, 1, 7), std::invalid_argument);
}

TEST_CASE("h2 at c = k+1 is the h1 family on (X, C)") {
    const FieldSpec& f = make_field(2);
    Flag flag = build_flag(9, f, {1, 3, 4}, 3);
    Family h2fam = build_h2(flag.at_dim(1), flag.at_dim(3), flag.at_dim(4), 1, 3, budget);
    Family h1fam = build_h1(flag.at_dim(1), flag.at_dim(4), 1, 3, budget);
    CHECK(h2fam.size() == 883);
    CHECK(h2fam == h1fam);
}

TEST_CASE("h2 at (t = k-2, c = n) is the h3 family on M") {
    const FieldSpec& f = make_field(2);
    Flag flag = build_flag(8, f, {1, 3}, 4);
    Family h2fam = build_h2(flag.at_dim(1), flag.at_dim(3), Subspace::full(8, f), 1, 3, budget);
    Family h3fam = build_h3(flag.at_dim(3), 1, 3, budget);
    CHECK(h2fam == h3fam);
}

TEST_CASE("h3 enumerated sizes match the closed form") {
    CHECK(make_h3(2, 9, 3, 1).size() == 883);
    CHECK(make_h3(2, 6, 3, 1).size() == 99);
    CHECK(make_h3(3, 6, 3, 1).size() == 508);
}

TEST_CASE("t-intersection predicate") {
    Family fam = make_h1(2, 8, 3, 1);
    CHECK(is_t_intersecting(fam).ok);

    // two disjoint planes in GF(2)^4 are not 1-intersecting
    const FieldSpec& f = make_field(2);
    Subspace a = canonicalize({{1, 0, 0, 0}, {0, 1, 0, 0}}, f, 4);
    Subspace b = canonicalize({{0, 0, 1, 0}, {0, 0, 0, 1}}, f, 4);
    Family bad({4, 2, 1, 2}, Construction::Custom, {}, {a, b});
    auto check = is_t_intersecting(bad);
    CHECK(!check.ok);
    REQUIRE(check.witness.has_value());
    CHECK(intersect_dim(check.witness->first, check.witness->second) == 0);

    Family single({4, 2, 1, 2}, Construction::Custom, {}, {a});
    CHECK(is_t_intersecting(single).ok);
}

TEST_CASE("common core dimension distinguishes trivial families") {
    const FieldSpec& f = make_field(2);
    Flag flag = build_flag(8, f, {1}, 9);
    Family star = star_family(2, 8, 3, flag.at_dim(1));
    CHECK(common_core_dim(star) >= 1);

    Family h3fam = make_h3(2, 8, 3, 1);
    CHECK(common_core_dim(h3fam) == 0);

    Subspace one = canonicalize({{1, 0, 0, 0}, {0, 1, 0, 0}}, f, 4);
    Family single({4, 2, 1, 2}, Construction::Custom, {}, {one});
    CHECK(common_core_dim(single) == 2);

    Family empty({4, 2, 1, 2}, Construction::Custom, {}, {});
    CHECK_THROWS_AS(common_core_dim(empty), std::invalid_argument);
}

TEST_CASE("maximality of the constructions at desk scale") {
    Family h1fam = make_h1(2, 8, 3, 1);
    CHECK(is_maximal(h1fam, budget).maximal);

    // the full star over a t-space is maximal
    const FieldSpec& f = make_field(2);
    Flag flag = build_flag(8, f, {1}, 5);
    Family star = star_family(2, 8, 3, flag.at_dim(1));
    CHECK(is_maximal(star, budget).maximal);
}

TEST_CASE("removing a member breaks maximality and the hole is addable") {
    Family h3fam = make_h3(2, 6, 3, 1);
    std::vector<Subspace> members = h3fam.members();
    Subspace removed = members.back();
    members.pop_back();
    Family smaller(h3fam.params(), Construction::Custom, {}, std::move(members));
    auto check = is_maximal(smaller, budget);
    CHECK(!check.maximal);
    REQUIRE(check.addable.has_value());
    // any returned witness must itself be addable
    for (const auto& m : smaller.members()) CHECK(intersect_dim(*check.addable, m) >= 1);
    // and the removed member certainly is
    for (const auto& m : smaller.members()) CHECK(intersect_dim(removed, m) >= 1);
}

TEST_CASE("restriction to a subspace") {
    Family fam = make_h1(2, 8, 3, 1);
    const Subspace& X = fam.defining()[0];
    const FieldSpec& f = make_field(2);

    Family all = restrict_to(fam, Subspace::zero(8, f));
    CHECK(all.size() == fam.size());

    Subspace member = fam.members().front();
    Family just_one = restrict_to(fam, member);
    CHECK(just_one.size() == 1);
    CHECK(just_one.members()[0] == member);

    Family through_x = restrict_to(fam, X);
    CHECK(through_x.size() == fam.size() - 8);  // the members outside the star over X
}

TEST_CASE("restriction bound holds on sampled subspaces") {
    Family fam = make_h1(2, 8, 3, 1);
    const auto& p = fam.params();
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int s = 0; s <= p.k - 1; ++s) {
        for (int trial = 0; trial < 40; ++trial) {
            std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(s),
                                                   std::vector<uint8_t>(static_cast<size_t>(p.n)));
            for (auto& r : rows)
                for (auto& v : r) v = static_cast<uint8_t>(coin(rng));
            Subspace S = canonicalize(rows, make_field(2), p.n);
            if (S.dim() != s || s < p.t - 1) continue;
            Family restricted = restrict_to(fam, S);
            for (const auto& member : fam.members()) {
                int r = intersect_dim(S, member);
                if (r >= p.t) continue;
                ExactInt bound = fs_bound(p.k, p.t, r, s, p.n, p.q);
                CHECK(cmp(bound, restricted.size()) >= 0);
            }
        }
    }
}

TEST_CASE("covering-step bound holds with exhaustively searched extensions") {
    // for families with covering number t+1: an s-space S meeting some
    // member in dimension r < t admits extensions T_i inside S + F' with
    // |F_S| <= [k-r, i] |F_{T_i}|
    for (auto fam : {make_h1(2, 8, 3, 1), make_h3(2, 8, 3, 1)}) {
        const auto& p = fam.params();
        std::mt19937_64 rng(55);
        std::uniform_int_distribution<int> coin(0, 1);
        for (int s = std::max(0, p.t - 1); s <= p.k - 1; ++s) {
            for (int trial = 0; trial < 25; ++trial) {
                std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(s),
                                                       std::vector<uint8_t>(static_cast<size_t>(p.n)));
                for (auto& r : rows)
                    for (auto& v : r) v = static_cast<uint8_t>(coin(rng));
                Subspace S = canonicalize(rows, make_field(2), p.n);
                if (S.dim() != s) continue;

                const Subspace* fprime = nullptr;
                int r = -1;
                for (const auto& member : fam.members()) {
                    int d = intersect_dim(S, member);
                    if (d < p.t) {
                        fprime = &member;
                        r = d;
                        break;
                    }
                }
                if (!fprime) continue;

                size_t fs = restrict_to(fam, S).size();
                Subspace reach = sum_space(S, *fprime);
                for (int i = 1; i <= p.t - r; ++i) {
                    size_t best = 0;
                    enumerate_superspaces_of(S, s + i, budget, [&](const Subspace& H) {
                        if (!space_contains(reach, H)) return true;
                        size_t fh = restrict_to(fam, H).size();
                        if (fh > best) best = fh;
                        return true;
                    });
                    ExactInt bound = gauss_binom(p.k - r, i, p.q) * static_cast<unsigned long>(best);
                    CHECK(cmp(bound, fs) >= 0);
                }
            }
        }
    }
}

TEST_CASE("family construction re-validates invariants") {
    const FieldSpec& f = make_field(2);
    Subspace plane = canonicalize({{1, 0, 0, 0}, {0, 1, 0, 0}}, f, 4);
    Subspace line = canonicalize({{1, 0, 0, 0}}, f, 4);
    CHECK_THROWS_AS(Family({4, 2, 1, 2}, Construction::Custom, {}, {plane, line}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Family({5, 2, 1, 2}, Construction::Custom, {}, {plane}), std::invalid_argument);
    CHECK_THROWS_AS(Family({4, 2, 1, 3}, Construction::Custom, {}, {plane}), std::invalid_argument);
}
