#pragma once

#include <optional>
#include <vector>

#include "qgrass/family.hpp"

namespace qgrass {

// Witness of a covering level: a subspace T with dim(T n F) >= t for every
// member F, verified against the whole family.
struct CoverWitness {
    Subspace subspace;
    int level = 0;
    bool verified = false;
};

struct CoveringResult {
    // least level d <= max_level admitting a witness; empty if none found
    std::optional<int> level;
    // every witness at that level, in deterministic order
    std::vector<Subspace> witnesses;

    bool found() const { return level.has_value(); }
    std::vector<CoverWitness> as_cover_witnesses() const;
};

// Computes the t-covering number by searching levels bottom-up from d = t.
// Any d-dimensional cover meets the first member in dimension >= t, so it
// contains a t-subspace of that member; candidates are therefore the union
// of superspace stars over those t-subspaces, which is a complete set.
CoveringResult covering_number(const Family& fam, int t, int max_level, const EnumerationBudget& budget);

// Shape of the full witness set at level t+1.
enum class WitnessShape {
    StarOnX,   // all witnesses contain a common t-space X; M is their span
    AllOfZ,    // witnesses are exactly the (t+1)-subspaces of a (t+2)-space Z
    Anomaly,   // neither pattern; surfaced, never silently resolved
};

struct TStructure {
    WitnessShape shape = WitnessShape::Anomaly;
    std::optional<Subspace> x;  // StarOnX
    std::optional<Subspace> m;  // StarOnX: span of the witnesses
    int l = 0;                  // StarOnX: dim(m)
    std::optional<Subspace> z;  // AllOfZ
};

// Classifies the witness set of a level-(t+1) covering result.  The AllOfZ
// test runs first: if it applies there is no common t-subspace, so the two
// shapes cannot both match.
TStructure analyze_T_structure(const Family& fam, const CoveringResult& cover,
                               const EnumerationBudget& budget);

// Rebuilds the family that the witness structure dictates:
//   StarOnX with l = k+1        -> the h1 family on (X, M);
//   StarOnX with l = k          -> the h2 family on (X, M, C) where
//                                  C = M + sum of members not through X;
//   AllOfZ                      -> the h3 family on Z.
// Throws when the shape admits no reconstruction (bound-only cases).
Family reconstruct_from_structure(const Family& fam, const TStructure& structure,
                                  const EnumerationBudget& budget);

}  // namespace qgrass
