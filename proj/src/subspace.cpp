#include "qgrass/subspace.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

namespace qgrass {

namespace detail {

int rref_bytes(uint8_t* rows, int nrows, int n, const FieldSpec& f) {
    int rank = 0;
    for (int col = 0; col < n && rank < nrows; ++col) {
        int pivot_row = -1;
        for (int r = rank; r < nrows; ++r) {
            if (rows[static_cast<size_t>(r) * n + col] != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != rank) {
            for (int j = 0; j < n; ++j)
                std::swap(rows[static_cast<size_t>(pivot_row) * n + j],
                          rows[static_cast<size_t>(rank) * n + j]);
        }
        uint8_t* prow = rows + static_cast<size_t>(rank) * n;
        uint8_t scale = f.inv(prow[col]);
        if (scale != 1) {
            for (int j = col; j < n; ++j) prow[j] = f.mul(prow[j], scale);
        }
        for (int r = 0; r < nrows; ++r) {
            if (r == rank) continue;
            uint8_t factor = rows[static_cast<size_t>(r) * n + col];
            if (factor == 0) continue;
            uint8_t* rrow = rows + static_cast<size_t>(r) * n;
            for (int j = col; j < n; ++j) rrow[j] = f.sub(rrow[j], f.mul(factor, prow[j]));
        }
        ++rank;
    }
    return rank;
}

int rank_bytes(uint8_t* rows, int nrows, int n, const FieldSpec& f) {
    int rank = 0;
    for (int col = 0; col < n && rank < nrows; ++col) {
        int pivot_row = -1;
        for (int r = rank; r < nrows; ++r) {
            if (rows[static_cast<size_t>(r) * n + col] != 0) {
                pivot_row = r;
                break;
            }
        }
        if (pivot_row < 0) continue;
        if (pivot_row != rank) {
            for (int j = col; j < n; ++j)
                std::swap(rows[static_cast<size_t>(pivot_row) * n + j],
                          rows[static_cast<size_t>(rank) * n + j]);
        }
        const uint8_t* prow = rows + static_cast<size_t>(rank) * n;
        uint8_t pinv = f.inv(prow[col]);
        for (int r = rank + 1; r < nrows; ++r) {
            uint8_t factor = rows[static_cast<size_t>(r) * n + col];
            if (factor == 0) continue;
            factor = f.mul(factor, pinv);
            uint8_t* rrow = rows + static_cast<size_t>(r) * n;
            for (int j = col; j < n; ++j) rrow[j] = f.sub(rrow[j], f.mul(factor, prow[j]));
        }
        ++rank;
    }
    return rank;
}

int rank_bits(uint64_t* rows, int nrows) {
    // Pivot table keyed by lowest set bit; each reduction step strictly
    // raises the lowest set bit of v, so the loop terminates.
    uint64_t table[64];
    uint64_t occupied = 0;
    int rank = 0;
    for (int r = 0; r < nrows; ++r) {
        uint64_t v = rows[r];
        while (v) {
            int p = std::countr_zero(v);
            if (occupied & (1ull << p)) {
                v ^= table[p];
            } else {
                table[p] = v;
                occupied |= 1ull << p;
                ++rank;
                break;
            }
        }
    }
    return rank;
}

}  // namespace detail

Subspace Subspace::zero(int n, const FieldSpec& f) {
    Subspace s;
    s.n_ = n;
    s.q_ = f.q();
    s.dim_ = 0;
    return s;
}

Subspace Subspace::full(int n, const FieldSpec& f) {
    Subspace s;
    s.n_ = n;
    s.q_ = f.q();
    s.dim_ = n;
    s.rows_.assign(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) s.rows_[static_cast<size_t>(i) * n + i] = 1;
    return s;
}

int Subspace::pivot(int i) const {
    for (int j = 0; j < n_; ++j)
        if (entry(i, j) != 0) return j;
    return -1;
}

uint64_t Subspace::row_bits(int i) const {
    uint64_t w = 0;
    const uint8_t* r = rows_.data() + static_cast<size_t>(i) * n_;
    for (int j = 0; j < n_; ++j) w |= static_cast<uint64_t>(r[j] & 1u) << j;
    return w;
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim_ != o.dim_) return dim_ < o.dim_;
    return rows_ < o.rows_;
}

size_t SubspaceHash::operator()(const Subspace& s) const {
    // FNV-1a over the canonical rows
    size_t h = 1469598103934665603ull;
    h = (h ^ static_cast<size_t>(s.n())) * 1099511628211ull;
    h = (h ^ static_cast<size_t>(s.dim())) * 1099511628211ull;
    for (uint8_t b : s.raw()) h = (h ^ b) * 1099511628211ull;
    return h;
}

Subspace canonicalize(std::vector<std::vector<uint8_t>> rows, const FieldSpec& f, int n) {
    if (n < 0 || n > 64) throw std::invalid_argument("canonicalize: ambient dimension out of range");
    std::vector<uint8_t> buf;
    buf.reserve(rows.size() * static_cast<size_t>(n));
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw std::invalid_argument("canonicalize: row length " + std::to_string(r.size()) +
                                        " does not match ambient dimension " + std::to_string(n));
        for (uint8_t v : r) {
            if (v >= f.q())
                throw std::invalid_argument("canonicalize: entry " + std::to_string(int(v)) +
                                            " is not an element of GF(" + std::to_string(f.q()) + ")");
        }
        buf.insert(buf.end(), r.begin(), r.end());
    }
    int rank = detail::rref_bytes(buf.data(), static_cast<int>(rows.size()), n, f);
    buf.resize(static_cast<size_t>(rank) * static_cast<size_t>(n));
    Subspace s;
    s.n_ = n;
    s.q_ = f.q();
    s.dim_ = rank;
    s.rows_ = std::move(buf);
    return s;
}

Subspace from_canonical_rows(std::vector<uint8_t> rows, int dim, int n, const FieldSpec& f) {
    Subspace s;
    s.n_ = n;
    s.q_ = f.q();
    s.dim_ = dim;
    s.rows_ = std::move(rows);
    return s;
}

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* who) {
    if (a.n() != b.n() || a.q() != b.q())
        throw std::invalid_argument(std::string(who) + ": ambient space mismatch");
}

}  // namespace

int intersect_dim(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect_dim");
    int n = a.n();
    int m = a.dim() + b.dim();
    if (a.q() == 2) {
        uint64_t buf[128];
        for (int i = 0; i < a.dim(); ++i) buf[i] = a.row_bits(i);
        for (int i = 0; i < b.dim(); ++i) buf[a.dim() + i] = b.row_bits(i);
        return a.dim() + b.dim() - detail::rank_bits(buf, m);
    }
    std::vector<uint8_t> buf;
    buf.reserve(static_cast<size_t>(m) * n);
    buf.insert(buf.end(), a.raw().begin(), a.raw().end());
    buf.insert(buf.end(), b.raw().begin(), b.raw().end());
    return a.dim() + b.dim() - detail::rank_bytes(buf.data(), m, n, a.field());
}

Subspace sum_space(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "sum_space");
    std::vector<uint8_t> buf;
    buf.reserve((a.raw().size() + b.raw().size()));
    buf.insert(buf.end(), a.raw().begin(), a.raw().end());
    buf.insert(buf.end(), b.raw().begin(), b.raw().end());
    int rank = detail::rref_bytes(buf.data(), a.dim() + b.dim(), a.n(), a.field());
    buf.resize(static_cast<size_t>(rank) * static_cast<size_t>(a.n()));
    return from_canonical_rows(std::move(buf), rank, a.n(), a.field());
}

Subspace intersect_space(const Subspace& a, const Subspace& b) {
    require_same_ambient(a, b, "intersect_space");
    // Zassenhaus: reduce [A | A; B | 0]; rows with zero left half carry a
    // basis of the intersection in their right half.
    int n = a.n();
    int da = a.dim(), db = b.dim();
    int w = 2 * n;
    std::vector<uint8_t> buf(static_cast<size_t>(da + db) * w, 0);
    for (int i = 0; i < da; ++i) {
        for (int j = 0; j < n; ++j) {
            buf[static_cast<size_t>(i) * w + j] = a.entry(i, j);
            buf[static_cast<size_t>(i) * w + n + j] = a.entry(i, j);
        }
    }
    for (int i = 0; i < db; ++i)
        for (int j = 0; j < n; ++j) buf[static_cast<size_t>(da + i) * w + j] = b.entry(i, j);

    const FieldSpec& f = a.field();
    int rank = detail::rref_bytes(buf.data(), da + db, w, f);
    std::vector<std::vector<uint8_t>> inter_rows;
    for (int i = 0; i < rank; ++i) {
        bool left_zero = true;
        for (int j = 0; j < n && left_zero; ++j)
            if (buf[static_cast<size_t>(i) * w + j] != 0) left_zero = false;
        if (!left_zero) continue;
        std::vector<uint8_t> row(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = buf[static_cast<size_t>(i) * w + n + j];
        inter_rows.push_back(std::move(row));
    }
    return canonicalize(std::move(inter_rows), f, n);
}

bool space_contains(const Subspace& outer, const Subspace& inner) {
    require_same_ambient(outer, inner, "space_contains");
    if (inner.dim() > outer.dim()) return false;
    const FieldSpec& f = outer.field();
    int n = outer.n();
    // reduce every inner row against outer's echelon basis
    std::vector<uint8_t> row(static_cast<size_t>(n));
    for (int i = 0; i < inner.dim(); ++i) {
        for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = inner.entry(i, j);
        for (int r = 0; r < outer.dim(); ++r) {
            int p = outer.pivot(r);
            uint8_t factor = row[static_cast<size_t>(p)];
            if (factor == 0) continue;
            for (int j = p; j < n; ++j)
                row[static_cast<size_t>(j)] = f.sub(row[static_cast<size_t>(j)], f.mul(factor, outer.entry(r, j)));
        }
        for (int j = 0; j < n; ++j)
            if (row[static_cast<size_t>(j)] != 0) return false;
    }
    return true;
}

bool meets_in_dim(const Subspace& a, const Subspace& b, int t) {
    return intersect_dim(a, b) >= t;
}

const Subspace& Flag::at_dim(int d) const {
    for (const auto& s : levels)
        if (s.dim() == d) return s;
    throw std::invalid_argument("Flag::at_dim: no level of dimension " + std::to_string(d));
}

Flag build_flag(int n, const FieldSpec& f, const std::vector<int>& dims, uint64_t seed) {
    for (size_t i = 0; i < dims.size(); ++i) {
        if (dims[i] < 1 || dims[i] > n)
            throw std::invalid_argument("build_flag: dimension out of range");
        if (i > 0 && dims[i] <= dims[i - 1])
            throw std::invalid_argument("build_flag: dimensions must be strictly increasing");
    }
    if (dims.empty()) throw std::invalid_argument("build_flag: empty dimension list");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coin(0, f.q() - 1);

    // Grow one basis; level i spans the first dims[i] vectors.
    std::vector<std::vector<uint8_t>> basis;
    int target = dims.back();
    while (static_cast<int>(basis.size()) < target) {
        std::vector<uint8_t> v(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) v[static_cast<size_t>(j)] = static_cast<uint8_t>(coin(rng));
        auto trial = basis;
        trial.push_back(v);
        if (canonicalize(trial, f, n).dim() == static_cast<int>(trial.size()))
            basis.push_back(std::move(v));
    }

    Flag flag;
    for (int d : dims) {
        std::vector<std::vector<uint8_t>> rows(basis.begin(), basis.begin() + d);
        flag.levels.push_back(canonicalize(std::move(rows), f, n));
    }
    return flag;
}

}  // namespace qgrass
