#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qgrass/enumerate.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

struct FamilyParams {
    int n = 0;
    int k = 0;
    int t = 0;
    int q = 2;

    bool operator==(const FamilyParams&) const = default;
};

enum class Construction { H1, H2, H3, Custom };

std::string construction_name(Construction c);
Construction construction_from_name(const std::string& name);

// Which piece of the three-part construction a member came from.
enum class H2Part : uint8_t {
    A,  // X <= F and dim(F n M) >= t+1
    B,  // F n M = X and dim(F n C) = c-k+t
    C,  // F <= C, dim(F n X) = t-1, dim(F n M) = k-1
};

// A finite set of equal-dimension subspaces with a membership index.
// Members are stored sorted in the deterministic subspace order, so two
// families with the same member set compare equal structurally.
class Family {
public:
    Family(FamilyParams params, Construction prov, std::vector<Subspace> defining,
           std::vector<Subspace> members,
           std::unordered_map<Subspace, H2Part, SubspaceHash> tags = {});

    const FamilyParams& params() const { return params_; }
    Construction construction() const { return prov_; }
    const std::vector<Subspace>& defining() const { return defining_; }
    const std::vector<Subspace>& members() const { return members_; }
    size_t size() const { return members_.size(); }
    bool contains_member(const Subspace& s) const { return index_.count(s) > 0; }

    bool has_tags() const { return !tags_.empty(); }
    H2Part tag_of(const Subspace& member) const;
    size_t count_tag(H2Part part) const;

    // Re-checks every stored invariant (ambient, dimension, canonical form,
    // duplicates); used when families arrive from files.
    void revalidate() const;

    bool operator==(const Family& o) const {
        return params_ == o.params_ && members_ == o.members_;
    }

private:
    FamilyParams params_;
    Construction prov_;
    std::vector<Subspace> defining_;
    std::vector<Subspace> members_;
    std::unordered_set<Subspace, SubspaceHash> index_;
    std::unordered_map<Subspace, H2Part, SubspaceHash> tags_;
};

// All k-spaces through X meeting the (k+1)-space M in dimension >= t+1,
// plus every k-subspace of M.
Family build_h1(const Subspace& X, const Subspace& M, int t, int k, const EnumerationBudget& budget);

// The three-part family for a flag X <= M <= C with dim M = k and
// dim C in {k+1, ..., 2k-t} u {n}; members carry their part tag.
Family build_h2(const Subspace& X, const Subspace& M, const Subspace& C, int t, int k,
                const EnumerationBudget& budget);

// All k-spaces meeting the (t+2)-space Z in dimension >= t+1.
Family build_h3(const Subspace& Z, int t, int k, const EnumerationBudget& budget);

struct IntersectionCheck {
    bool ok = false;
    // first offending pair when not t-intersecting
    std::optional<std::pair<Subspace, Subspace>> witness;
};
IntersectionCheck is_t_intersecting(const Family& fam);

// Dimension of the intersection of all members; a t-intersecting family is
// trivial exactly when this is >= t.
int common_core_dim(const Family& fam);

struct MaximalityCheck {
    bool maximal = false;
    // a k-space outside the family t-intersecting every member
    std::optional<Subspace> addable;
};
// Scans the whole Grassmannian (within budget), pruning each candidate at
// its first low-intersection member; partitions pivot patterns across
// threads.  thread_count 0 means hardware concurrency.
MaximalityCheck is_maximal(const Family& fam, const EnumerationBudget& budget, int thread_count = 0);

// Subfamily of members containing S.
Family restrict_to(const Family& fam, const Subspace& S);

}  // namespace qgrass
