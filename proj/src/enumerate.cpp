#include "qgrass/enumerate.hpp"

#include <cstdlib>

namespace qgrass {

EnumerationBudget EnumerationBudget::from_env_or_default() {
    EnumerationBudget b;
    if (const char* env = std::getenv("QGRASS_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) b.max_count = v;
    }
    return b;
}

std::vector<Subspace> collect_grassmannian(int n, int k, const FieldSpec& f, const EnumerationBudget& budget) {
    std::vector<Subspace> out;
    enumerate_grassmannian(n, k, f, budget, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Subspace> collect_subspaces_of(const Subspace& M, int j, const EnumerationBudget& budget) {
    std::vector<Subspace> out;
    enumerate_subspaces_of(M, j, budget, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::vector<Subspace> collect_superspaces_of(const Subspace& S, int d, const EnumerationBudget& budget) {
    std::vector<Subspace> out;
    enumerate_superspaces_of(S, d, budget, [&](const Subspace& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

}  // namespace qgrass
