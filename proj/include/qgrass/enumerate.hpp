#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qgrass/counts.hpp"
#include "qgrass/field.hpp"
#include "qgrass/subspace.hpp"

namespace qgrass {

// Cap on the number of subspaces any single enumeration may produce; guards
// against accidentally infeasible requests.  QGRASS_BUDGET overrides the
// default.
struct EnumerationBudget {
    static constexpr uint64_t kDefault = uint64_t(1) << 24;
    uint64_t max_count = kDefault;

    static EnumerationBudget from_env_or_default();
};

class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const ExactInt& count, uint64_t budget)
        : std::runtime_error("enumeration budget exceeded: " + count.get_str() + " subspaces requested, cap is " +
                             std::to_string(budget)) {}
};

inline void check_budget(const ExactInt& count, const EnumerationBudget& budget) {
    if (cmp(count, budget.max_count) > 0) throw BudgetExceeded(count, budget.max_count);
}

namespace detail {

// Emits every k-subspace of GF(q)^n exactly once: pivot-column patterns in
// lexicographic order, free entries in odometer order within each pattern.
// The emitted reference aliases an internal scratch buffer; visitors that
// keep a subspace must copy it.  The visitor returns false to stop early.
//
// `stride`/`offset` restrict the walk to every stride-th pivot pattern,
// which is the disjoint partition used for parallel sweeps.
template <typename Visitor>
void walk_grassmannian(int n, int k, const FieldSpec& f, Visitor&& visit, int stride = 1, int offset = 0) {
    if (k < 0 || k > n) return;
    const int q = f.q();

    std::vector<int> piv(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) piv[static_cast<size_t>(i)] = i;

    std::vector<uint8_t> rows(static_cast<size_t>(k) * static_cast<size_t>(n), 0);
    Subspace scratch = from_canonical_rows(rows, k, n, f);
    // the scratch buffer is mutated in place between emits
    auto& buf = const_cast<std::vector<uint8_t>&>(scratch.raw());

    long pattern_index = 0;
    bool more = true;
    while (more) {
        if (pattern_index % stride == offset) {
            // base matrix for this pattern: unit pivots, zeros elsewhere
            std::fill(buf.begin(), buf.end(), 0);
            std::vector<bool> is_piv(static_cast<size_t>(n), false);
            for (int i = 0; i < k; ++i) {
                buf[static_cast<size_t>(i) * n + piv[static_cast<size_t>(i)]] = 1;
                is_piv[static_cast<size_t>(piv[static_cast<size_t>(i)])] = true;
            }
            // free slots: row i, non-pivot columns right of its pivot
            std::vector<size_t> free_pos;
            for (int i = 0; i < k; ++i)
                for (int j = piv[static_cast<size_t>(i)] + 1; j < n; ++j)
                    if (!is_piv[static_cast<size_t>(j)])
                        free_pos.push_back(static_cast<size_t>(i) * n + static_cast<size_t>(j));

            for (;;) {
                if (!visit(static_cast<const Subspace&>(scratch))) return;
                // odometer over the free slots, last slot fastest
                size_t idx = free_pos.size();
                while (idx > 0) {
                    uint8_t& cell = buf[free_pos[idx - 1]];
                    if (cell + 1 < q) {
                        ++cell;
                        break;
                    }
                    cell = 0;
                    --idx;
                }
                if (idx == 0) break;
            }
        }

        // next k-combination of {0..n-1} in lexicographic order
        int i = k - 1;
        while (i >= 0 && piv[static_cast<size_t>(i)] == n - k + i) --i;
        if (i < 0) {
            more = false;
        } else {
            ++piv[static_cast<size_t>(i)];
            for (int j = i + 1; j < k; ++j) piv[static_cast<size_t>(j)] = piv[static_cast<size_t>(j - 1)] + 1;
        }
    }
}

}  // namespace detail

template <typename Visitor>
void enumerate_grassmannian(int n, int k, const FieldSpec& f, const EnumerationBudget& budget, Visitor&& visit) {
    if (k < 0 || k > n) return;
    check_budget(gauss_binom(n, k, f.q()), budget);
    detail::walk_grassmannian(n, k, f, std::forward<Visitor>(visit));
}

// Every j-subspace of a fixed subspace M, via the coordinate chart given by
// M's basis rows.
template <typename Visitor>
void enumerate_subspaces_of(const Subspace& M, int j, const EnumerationBudget& budget, Visitor&& visit) {
    if (j < 0 || j > M.dim()) return;
    check_budget(gauss_binom(M.dim(), j, M.q()), budget);
    const FieldSpec& f = M.field();
    const int n = M.n();
    detail::walk_grassmannian(M.dim(), j, f, [&](const Subspace& W) {
        std::vector<std::vector<uint8_t>> rows(static_cast<size_t>(j), std::vector<uint8_t>(static_cast<size_t>(n), 0));
        for (int r = 0; r < j; ++r)
            for (int i = 0; i < M.dim(); ++i) {
                uint8_t wri = W.entry(r, i);
                if (wri == 0) continue;
                for (int col = 0; col < n; ++col)
                    rows[static_cast<size_t>(r)][static_cast<size_t>(col)] =
                        f.add(rows[static_cast<size_t>(r)][static_cast<size_t>(col)], f.mul(wri, M.entry(i, col)));
            }
        return visit(canonicalize(std::move(rows), f, n));
    });
}

// Every d-subspace of the ambient space containing the fixed subspace S.
// Subspaces T >= S correspond to (d - dim S)-subspaces of the quotient V/S,
// charted on the non-pivot coordinates of S.
template <typename Visitor>
void enumerate_superspaces_of(const Subspace& S, int d, const EnumerationBudget& budget, Visitor&& visit) {
    const int n = S.n();
    const int s = S.dim();
    if (d < s || d > n) return;
    if (d == s) {
        visit(S);
        return;
    }
    check_budget(gauss_binom(n - s, d - s, S.q()), budget);
    const FieldSpec& f = S.field();

    std::vector<int> non_piv;
    {
        std::vector<bool> is_piv(static_cast<size_t>(n), false);
        for (int i = 0; i < s; ++i) is_piv[static_cast<size_t>(S.pivot(i))] = true;
        for (int j = 0; j < n; ++j)
            if (!is_piv[static_cast<size_t>(j)]) non_piv.push_back(j);
    }

    detail::walk_grassmannian(n - s, d - s, f, [&](const Subspace& W) {
        std::vector<std::vector<uint8_t>> rows;
        rows.reserve(static_cast<size_t>(d));
        for (int i = 0; i < s; ++i) {
            auto r = S.row(i);
            rows.emplace_back(r.begin(), r.end());
        }
        for (int r = 0; r < d - s; ++r) {
            std::vector<uint8_t> row(static_cast<size_t>(n), 0);
            for (int j = 0; j < n - s; ++j)
                row[static_cast<size_t>(non_piv[static_cast<size_t>(j)])] = W.entry(r, j);
            rows.push_back(std::move(row));
        }
        return visit(canonicalize(std::move(rows), f, n));
    });
}

std::vector<Subspace> collect_grassmannian(int n, int k, const FieldSpec& f, const EnumerationBudget& budget);
std::vector<Subspace> collect_subspaces_of(const Subspace& M, int j, const EnumerationBudget& budget);
std::vector<Subspace> collect_superspaces_of(const Subspace& S, int d, const EnumerationBudget& budget);

}  // namespace qgrass
