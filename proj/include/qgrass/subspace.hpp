#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "qgrass/field.hpp"

namespace qgrass {

// A subspace of GF(q)^n held as its reduced row-echelon basis: pivot
// entries 1, pivot columns strictly increasing, zeros above and below every
// pivot.  The representation is unique, so set equality of subspaces is
// byte equality of the stored rows, and hashing is hashing of the bytes.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(int n, const FieldSpec& f);
    static Subspace full(int n, const FieldSpec& f);

    int n() const { return n_; }
    int q() const { return q_; }
    int dim() const { return dim_; }
    const FieldSpec& field() const { return make_field(q_); }

    uint8_t entry(int row, int col) const {
        return rows_[static_cast<size_t>(row) * static_cast<size_t>(n_) + static_cast<size_t>(col)];
    }
    std::span<const uint8_t> row(int i) const {
        return {rows_.data() + static_cast<size_t>(i) * static_cast<size_t>(n_),
                static_cast<size_t>(n_)};
    }
    const std::vector<uint8_t>& raw() const { return rows_; }

    // pivot column of row i
    int pivot(int i) const;

    // row i packed into one word, little-endian bits; q = 2 and n <= 64 only
    uint64_t row_bits(int i) const;

    bool operator==(const Subspace& o) const {
        return n_ == o.n_ && q_ == o.q_ && dim_ == o.dim_ && rows_ == o.rows_;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    // deterministic total order (dimension, then rows lexicographically)
    bool operator<(const Subspace& o) const;

private:
    friend Subspace canonicalize(std::vector<std::vector<uint8_t>> rows, const FieldSpec& f, int n);
    friend Subspace from_canonical_rows(std::vector<uint8_t> rows, int dim, int n, const FieldSpec& f);

    int n_ = 0;
    int q_ = 2;
    int dim_ = 0;
    std::vector<uint8_t> rows_;  // dim * n entries, row-major, already reduced
};

struct SubspaceHash {
    size_t operator()(const Subspace& s) const;
};

// Reduces an arbitrary spanning set to the canonical representative of its
// span.  Throws if a row has the wrong length or an entry outside 0..q-1.
Subspace canonicalize(std::vector<std::vector<uint8_t>> rows, const FieldSpec& f, int n);

// Wraps rows that are already in reduced echelon form (no copy of the
// elimination); used by the enumerators, which emit canonical rows directly.
Subspace from_canonical_rows(std::vector<uint8_t> rows, int dim, int n, const FieldSpec& f);

int intersect_dim(const Subspace& a, const Subspace& b);
Subspace sum_space(const Subspace& a, const Subspace& b);
Subspace intersect_space(const Subspace& a, const Subspace& b);
// inner as a subset of outer
bool space_contains(const Subspace& outer, const Subspace& inner);

// dim(A n B) >= t, short-circuiting; the workhorse of every family predicate.
bool meets_in_dim(const Subspace& a, const Subspace& b, int t);

// Chain of nested subspaces with strictly increasing dimensions.
struct Flag {
    std::vector<Subspace> levels;

    const Subspace& at_dim(int d) const;
};

// Deterministic pseudo-random flag with the requested dimensions; the same
// seed always produces the same chain.
Flag build_flag(int n, const FieldSpec& f, const std::vector<int>& dims, uint64_t seed);

namespace detail {

// In-place Gaussian elimination to reduced echelon form over GF(q);
// returns the rank, compacting nonzero rows to the front.
int rref_bytes(uint8_t* rows, int nrows, int n, const FieldSpec& f);

// Rank only (forward elimination), destroys the buffer.
int rank_bytes(uint8_t* rows, int nrows, int n, const FieldSpec& f);

// Bit-packed rank for GF(2); rows are 64-bit words, destroyed in place.
int rank_bits(uint64_t* rows, int nrows);

}  // namespace detail

}  // namespace qgrass
