#include "qgrass/covering.hpp"

#include <algorithm>
#include <stdexcept>

#include "qgrass/counts.hpp"

namespace qgrass {

namespace {

bool covers(const Subspace& T, const Family& fam, int t) {
    for (const auto& F : fam.members())
        if (intersect_dim(T, F) < t) return false;
    return true;
}

}  // namespace

std::vector<CoverWitness> CoveringResult::as_cover_witnesses() const {
    std::vector<CoverWitness> out;
    if (!level) return out;
    out.reserve(witnesses.size());
    for (const auto& w : witnesses) out.push_back({w, *level, true});
    return out;
}

CoveringResult covering_number(const Family& fam, int t, int max_level, const EnumerationBudget& budget) {
    const auto& p = fam.params();
    if (fam.members().empty()) throw std::invalid_argument("covering_number: empty family");
    if (max_level > p.n) throw std::invalid_argument("covering_number: max_level exceeds ambient dimension");

    const Subspace& first = fam.members().front();
    auto t_subspaces = collect_subspaces_of(first, t, budget);

    for (int d = t; d <= max_level; ++d) {
        check_budget(gauss_binom(p.k, t, p.q) * gauss_binom(p.n - t, d - t, p.q), budget);
        std::unordered_set<Subspace, SubspaceHash> seen;
        std::vector<Subspace> witnesses;
        for (const auto& S : t_subspaces) {
            enumerate_superspaces_of(S, d, budget, [&](const Subspace& T) {
                if (!seen.insert(T).second) return true;
                if (covers(T, fam, t)) witnesses.push_back(T);
                return true;
            });
        }
        if (!witnesses.empty()) {
            std::sort(witnesses.begin(), witnesses.end());
            return {d, std::move(witnesses)};
        }
    }
    return {std::nullopt, {}};
}

TStructure analyze_T_structure(const Family& fam, const CoveringResult& cover,
                               const EnumerationBudget& budget) {
    const auto& p = fam.params();
    if (!cover.found() || *cover.level != p.t + 1)
        throw std::invalid_argument("analyze_T_structure: needs a covering result at level t+1");
    const auto& W = cover.witnesses;
    if (W.empty()) throw std::invalid_argument("analyze_T_structure: empty witness set");

    TStructure out;

    // AllOfZ first: two witnesses spanning a (t+2)-space decide the shape,
    // provided the witness set is exactly the (t+1)-grassmannian of Z.
    if (W.size() >= 2) {
        Subspace Z = sum_space(W[0], W[1]);
        if (Z.dim() == p.t + 2) {
            ExactInt expected = gauss_binom(p.t + 2, p.t + 1, p.q);
            bool all_inside = std::all_of(W.begin(), W.end(),
                                          [&](const Subspace& T) { return space_contains(Z, T); });
            if (all_inside && cmp(expected, static_cast<unsigned long>(W.size())) == 0) {
                out.shape = WitnessShape::AllOfZ;
                out.z = Z;
                return out;
            }
        }
    }

    // StarOnX: the witnesses share a common t-space.  Two or more distinct
    // (t+1)-dimensional witnesses intersect in exactly the shared t-space;
    // a singleton witness set shares every one of its t-subspaces, so no
    // canonical X exists and only (M, l) are reported.
    Subspace common = W.front();
    Subspace M = W.front();
    for (const auto& T : W) {
        if (common.dim() >= p.t) common = intersect_space(common, T);
        M = sum_space(M, T);
    }
    if (common.dim() >= p.t) {
        ExactInt expected = gauss_binom(M.dim() - p.t, 1, p.q);
        if (M.dim() >= p.t + 1 && M.dim() <= p.k + 1 &&
            cmp(expected, static_cast<unsigned long>(W.size())) == 0) {
            out.shape = WitnessShape::StarOnX;
            if (common.dim() == p.t) out.x = common;
            out.m = M;
            out.l = M.dim();
            return out;
        }
    }

    (void)budget;
    out.shape = WitnessShape::Anomaly;
    return out;
}

Family reconstruct_from_structure(const Family& fam, const TStructure& structure,
                                  const EnumerationBudget& budget) {
    const auto& p = fam.params();
    switch (structure.shape) {
        case WitnessShape::AllOfZ:
            return build_h3(*structure.z, p.t, p.k, budget);
        case WitnessShape::StarOnX: {
            if (structure.l == p.k + 1) return build_h1(*structure.x, *structure.m, p.t, p.k, budget);
            if (structure.l == p.k) {
                // C = M + sum of the members not containing X
                Subspace C = *structure.m;
                for (const auto& F : fam.members())
                    if (!space_contains(F, *structure.x)) C = sum_space(C, F);
                return build_h2(*structure.x, *structure.m, C, p.t, p.k, budget);
            }
            throw std::invalid_argument(
                "reconstruct_from_structure: witness span of dimension " + std::to_string(structure.l) +
                " admits no construction (only dim k and k+1 do)");
        }
        case WitnessShape::Anomaly:
            throw std::invalid_argument("reconstruct_from_structure: anomalous witness structure");
    }
    throw std::logic_error("reconstruct_from_structure: unreachable");
}

}  // namespace qgrass
