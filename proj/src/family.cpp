#include "qgrass/family.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "qgrass/counts.hpp"

namespace qgrass {

std::string construction_name(Construction c) {
    switch (c) {
        case Construction::H1: return "h1";
        case Construction::H2: return "h2";
        case Construction::H3: return "h3";
        case Construction::Custom: return "custom";
    }
    return "custom";
}

Construction construction_from_name(const std::string& name) {
    if (name == "h1") return Construction::H1;
    if (name == "h2") return Construction::H2;
    if (name == "h3") return Construction::H3;
    if (name == "custom") return Construction::Custom;
    throw std::invalid_argument("unknown construction name: " + name);
}

Family::Family(FamilyParams params, Construction prov, std::vector<Subspace> defining,
               std::vector<Subspace> members, std::unordered_map<Subspace, H2Part, SubspaceHash> tags)
    : params_(params), prov_(prov), defining_(std::move(defining)), members_(std::move(members)),
      tags_(std::move(tags)) {
    std::sort(members_.begin(), members_.end());
    index_.reserve(members_.size() * 2);
    for (const auto& m : members_) index_.insert(m);
    revalidate();
}

H2Part Family::tag_of(const Subspace& member) const {
    auto it = tags_.find(member);
    if (it == tags_.end()) throw std::invalid_argument("Family::tag_of: member has no part tag");
    return it->second;
}

size_t Family::count_tag(H2Part part) const {
    size_t c = 0;
    for (const auto& [member, tag] : tags_) {
        (void)member;
        if (tag == part) ++c;
    }
    return c;
}

void Family::revalidate() const {
    const FieldSpec& f = make_field(params_.q);
    if (index_.size() != members_.size())
        throw std::invalid_argument("Family: duplicate members");
    for (size_t i = 0; i < members_.size(); ++i) {
        const Subspace& m = members_[i];
        if (m.n() != params_.n || m.q() != params_.q)
            throw std::invalid_argument("Family: member " + std::to_string(i) + " lives in the wrong ambient space");
        if (m.dim() != params_.k)
            throw std::invalid_argument("Family: member " + std::to_string(i) + " has dimension " +
                                        std::to_string(m.dim()) + ", expected " + std::to_string(params_.k));
        std::vector<std::vector<uint8_t>> rows;
        for (int r = 0; r < m.dim(); ++r) {
            auto row = m.row(r);
            rows.emplace_back(row.begin(), row.end());
        }
        if (canonicalize(std::move(rows), f, params_.n) != m)
            throw std::invalid_argument("Family: member " + std::to_string(i) + " is not in canonical form");
    }
}

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_flag_part(const Subspace& inner, const Subspace& outer, const char* who) {
    if (!space_contains(outer, inner))
        throw std::invalid_argument(std::string(who) + ": flag containment violated");
}

}  // namespace

Family build_h1(const Subspace& X, const Subspace& M, int t, int k, const EnumerationBudget& budget) {
    const int n = X.n();
    require(X.dim() == t, "build_h1: dim X must equal t");
    require(M.dim() == k + 1, "build_h1: dim M must equal k+1");
    require(t >= 1 && t <= k - 2, "build_h1: needs 1 <= t <= k-2");
    require(2 * k <= n, "build_h1: needs 2k <= n");
    require_flag_part(X, M, "build_h1");
    const FieldSpec& f = X.field();
    const long q = f.q();

    check_budget(gauss_binom(k + 1 - t, 1, q) * gauss_binom(n - t - 1, k - t - 1, q) +
                     gauss_binom(k + 1, k, q),
                 budget);

    std::unordered_set<Subspace, SubspaceHash> members;

    // F with X <= F and dim(F n M) >= t+1 contains a (t+1)-space T with
    // X <= T <= M, so the union of the stars over those T is the whole set.
    enumerate_superspaces_of(X, t + 1, budget, [&](const Subspace& T) {
        if (!space_contains(M, T)) return true;
        enumerate_superspaces_of(T, k, budget, [&](const Subspace& F) {
            members.insert(F);
            return true;
        });
        return true;
    });
    enumerate_subspaces_of(M, k, budget, [&](const Subspace& F) {
        members.insert(F);
        return true;
    });

    return Family({n, k, t, static_cast<int>(q)}, Construction::H1, {X, M},
                  std::vector<Subspace>(members.begin(), members.end()));
}

Family build_h2(const Subspace& X, const Subspace& M, const Subspace& C, int t, int k,
                const EnumerationBudget& budget) {
    const int n = X.n();
    const int c = C.dim();
    require(X.dim() == t, "build_h2: dim X must equal t");
    require(M.dim() == k, "build_h2: dim M must equal k");
    require(t >= 1 && t <= k - 2, "build_h2: needs 1 <= t <= k-2");
    require(2 * k <= n, "build_h2: needs 2k <= n");
    require(is_admissible_c(n, k, t, c), "build_h2: dim C must lie in {k+1, ..., 2k-t} or equal n");
    require_flag_part(X, M, "build_h2");
    require_flag_part(M, C, "build_h2");
    const FieldSpec& f = X.field();
    const long q = f.q();

    check_budget(gauss_binom(n - t, k - t, q) +
                     gauss_binom(k, k - 1, q) * gauss_binom(c - k + 1, 1, q),
                 budget);

    std::unordered_set<Subspace, SubspaceHash> members;
    std::unordered_map<Subspace, H2Part, SubspaceHash> tags;

    // Parts A and B both contain X; classify the star over X directly.
    enumerate_superspaces_of(X, k, budget, [&](const Subspace& F) {
        int dim_fm = intersect_dim(F, M);
        if (dim_fm >= t + 1) {
            members.insert(F);
            tags.emplace(F, H2Part::A);
        } else if (dim_fm == t && intersect_dim(F, C) == c - k + t) {
            // F n M has dimension t and contains X, hence equals X
            members.insert(F);
            tags.emplace(F, H2Part::B);
        }
        return true;
    });

    // Part C: F <= C with F n M a hyperplane D of M and dim(F n X) = t-1.
    enumerate_subspaces_of(M, k - 1, budget, [&](const Subspace& D) {
        enumerate_superspaces_of(D, k, budget, [&](const Subspace& F) {
            if (F == M) return true;
            if (!space_contains(C, F)) return true;
            if (intersect_dim(F, X) != t - 1) return true;
            members.insert(F);
            tags.emplace(F, H2Part::C);
            return true;
        });
        return true;
    });

    return Family({n, k, t, static_cast<int>(q)}, Construction::H2, {X, M, C},
                  std::vector<Subspace>(members.begin(), members.end()), std::move(tags));
}

Family build_h3(const Subspace& Z, int t, int k, const EnumerationBudget& budget) {
    const int n = Z.n();
    require(Z.dim() == t + 2, "build_h3: dim Z must equal t+2");
    require(t >= 1 && t <= k - 2, "build_h3: needs 1 <= t <= k-2");
    require(2 * k <= n, "build_h3: needs 2k <= n");
    const FieldSpec& f = Z.field();
    const long q = f.q();

    check_budget(gauss_binom(t + 2, t + 1, q) * gauss_binom(n - t - 1, k - t - 1, q), budget);

    std::unordered_set<Subspace, SubspaceHash> members;
    // every F with dim(F n Z) >= t+1 contains a (t+1)-subspace of Z
    enumerate_subspaces_of(Z, t + 1, budget, [&](const Subspace& S) {
        enumerate_superspaces_of(S, k, budget, [&](const Subspace& F) {
            members.insert(F);
            return true;
        });
        return true;
    });

    return Family({n, k, t, static_cast<int>(q)}, Construction::H3, {Z},
                  std::vector<Subspace>(members.begin(), members.end()));
}

IntersectionCheck is_t_intersecting(const Family& fam) {
    const auto& ms = fam.members();
    const int t = fam.params().t;
    for (size_t i = 0; i < ms.size(); ++i) {
        for (size_t j = i + 1; j < ms.size(); ++j) {
            if (intersect_dim(ms[i], ms[j]) < t) {
                return {false, std::make_pair(ms[i], ms[j])};
            }
        }
    }
    return {true, std::nullopt};
}

int common_core_dim(const Family& fam) {
    if (fam.members().empty()) throw std::invalid_argument("common_core_dim: empty family");
    Subspace core = fam.members().front();
    for (const auto& m : fam.members()) {
        if (core.dim() == 0) break;
        core = intersect_space(core, m);
    }
    return core.dim();
}

namespace {

// Members reordered so that candidates failing the t-intersection test die
// on the earliest possible probe: sort ascending by overlap with the first
// member, which puts the members farthest from the family's core up front.
std::vector<Subspace> pruning_order(const Family& fam) {
    std::vector<Subspace> out = fam.members();
    if (out.size() < 3) return out;
    const Subspace& pivot_member = out.front();
    std::stable_sort(out.begin(), out.end(), [&](const Subspace& a, const Subspace& b) {
        return intersect_dim(a, pivot_member) < intersect_dim(b, pivot_member);
    });
    return out;
}

// Packed GF(2) rows of every member, k words per member.
struct PackedMembers {
    int k = 0;
    std::vector<uint64_t> words;
};

PackedMembers pack_members_gf2(const std::vector<Subspace>& members, int k) {
    PackedMembers p;
    p.k = k;
    p.words.reserve(members.size() * static_cast<size_t>(k));
    for (const auto& m : members)
        for (int i = 0; i < k; ++i) p.words.push_back(m.row_bits(i));
    return p;
}

// dim(candidate n member) >= t over packed rows
bool meets_packed(const uint64_t* cand, const uint64_t* member, int k, int t) {
    uint64_t buf[128];
    for (int i = 0; i < k; ++i) buf[i] = cand[i];
    for (int i = 0; i < k; ++i) buf[k + i] = member[i];
    return 2 * k - detail::rank_bits(buf, 2 * k) >= t;
}

}  // namespace

MaximalityCheck is_maximal(const Family& fam, const EnumerationBudget& budget, int thread_count) {
    const auto& p = fam.params();
    const FieldSpec& f = make_field(p.q);
    check_budget(gauss_binom(p.n, p.k, p.q), budget);

    auto ordered = pruning_order(fam);
    const bool gf2 = (p.q == 2);
    PackedMembers packed;
    if (gf2) packed = pack_members_gf2(ordered, p.k);

    if (thread_count <= 0) thread_count = static_cast<int>(std::thread::hardware_concurrency());
    if (thread_count < 1) thread_count = 1;

    std::atomic<bool> found{false};
    std::mutex witness_mu;
    std::optional<Subspace> witness;

    auto worker = [&](int offset) {
        uint64_t cand_bits[64];
        detail::walk_grassmannian(p.n, p.k, f, [&](const Subspace& G) {
            if (found.load(std::memory_order_relaxed)) return false;
            bool all_meet = true;
            if (gf2) {
                for (int i = 0; i < p.k; ++i) cand_bits[i] = G.row_bits(i);
                const uint64_t* w = packed.words.data();
                for (size_t m = 0; m < ordered.size(); ++m, w += p.k) {
                    if (!meets_packed(cand_bits, w, p.k, p.t)) {
                        all_meet = false;
                        break;
                    }
                }
            } else {
                for (const auto& m : ordered) {
                    if (intersect_dim(G, m) < p.t) {
                        all_meet = false;
                        break;
                    }
                }
            }
            if (all_meet && !fam.contains_member(G)) {
                std::lock_guard<std::mutex> lock(witness_mu);
                if (!witness) witness = G;
                found.store(true, std::memory_order_relaxed);
                return false;
            }
            return true;
        }, thread_count, offset);
    };

    if (thread_count == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<size_t>(thread_count));
        for (int i = 0; i < thread_count; ++i) pool.emplace_back(worker, i);
        for (auto& th : pool) th.join();
    }

    if (witness) return {false, witness};
    return {true, std::nullopt};
}

Family restrict_to(const Family& fam, const Subspace& S) {
    if (S.n() != fam.params().n || S.q() != fam.params().q)
        throw std::invalid_argument("restrict_to: ambient space mismatch");
    std::vector<Subspace> kept;
    for (const auto& m : fam.members())
        if (space_contains(m, S)) kept.push_back(m);
    return Family(fam.params(), Construction::Custom, {S}, std::move(kept));
}

}  // namespace qgrass
