#pragma once

#include <optional>
#include <vector>

#include "qgrass/exact.hpp"

namespace qgrass {

// Closed-form subspace counts over GF(q).  All functions are pure, total on
// their stated domains, and exact; out-of-range Gaussian binomial arguments
// (b < 0 or b > a) evaluate to 0 so that vanishing terms of the size
// formulas need no special-casing at call sites.

// Gaussian binomial [a, b]_q: the number of b-dimensional subspaces of
// GF(q)^a.  Telescoping product; after step j the partial product equals
// [a-b+j, j]_q, so every intermediate division is exact.
ExactInt gauss_binom(long a, long b, long q);

// Same value via the recurrence [m, i] = [m-1, i-1] + q^i [m-1, i].
// Kept as a second, independent evaluation route; the two implementations
// cross-check each other in the test suite.
ExactInt gauss_binom_pascal(long a, long b, long q);

// Number of m-subspaces U of an (e+l)-dimensional space W with
// dim(U n L) = h, for a fixed l-subspace L of W:
//   q^{(m-h)(l-h)} [e, m-h] [l, h],
// and 0 unless 0 <= h <= l and 0 <= m-h <= e.
ExactInt type_count(long m, long h, long e, long l, long q);

// Number of (m, h)-type subspaces of W containing a fixed (m1, h1)-type
// subspace:
//   q^{(l-h)(m-h-m1+h1)} [e-(m1-h1), (m-h)-(m1-h1)] [l-h1, h-h1],
// and 0 unless 0 <= h1 <= h <= l and 0 <= m1-h1 <= m-h <= e.
ExactInt containing_count(long m1, long h1, long m, long h, long e, long l, long q);

// Size threshold under which the structure theorem classifies maximal
// non-trivial t-intersecting families:
//   [k-t, 1] [n-t-1, k-t-1] - q [k-t, 2] [n-t-2, k-t-2].
ExactInt f_threshold(long n, long k, long t, long q);

// The two sides of the telescoping identity
//   g1 - g2 = sum_{j=1..t} q^{j(t+2)+1} [t+1-j, 1] [n-t-2-j, t].
ExactInt g1(long t, long n, long q);
ExactInt g2(long t, long n, long q);
ExactInt g_diff_sum(long t, long n, long q);

// Sizes of the three extremal family constructions.
//
//   h1: all k-spaces through a t-space X meeting a (k+1)-space M in
//       dimension >= t+1, plus all k-subspaces of M;
//   h2: the union A(X,M) u B(X,M,C) u C(X,M,C) for a flag X < M < C with
//       dim C = c in {k+1, ..., 2k-t} u {n};
//   h3: all k-spaces meeting a fixed (t+2)-space Z in dimension >= t+1.
ExactInt h1_size(long t, long k, long n, long q);
ExactInt h2_size(long t, long k, long c, long n, long q);
ExactInt h3_size(long t, long k, long n, long q);

// The three disjoint pieces of the h2 construction, exposed separately so
// enumeration can be checked addend by addend.
struct H2Addends {
    ExactInt a;  // X <= F, dim(F n M) >= t+1
    ExactInt b;  // F n M = X, dim(F n C) = c-k+t
    ExactInt c;  // F <= C, dim(F n X) = t-1, dim(F n M) = k-1
    ExactInt total() const { return a + b + c; }
};
H2Addends h2_addends(long t, long k, long c, long n, long q);

// Upper bounds on a maximal non-trivial t-intersecting family, by
// covering-number case.

// t-covering number t+1, a unique (t+1)-dimensional witness.
ExactInt bound_tau1_single(long t, long k, long n, long q);

// t-covering number t+1, witnesses = (t+1)-spaces through X inside an
// l-dimensional M.  Requires t+1 <= l <= k+1; at l = t+2 the sharper
// variant of the third addend applies.
ExactInt bound_tau1_interval(long t, long k, long n, long l, long q);
ExactInt bound_tau1_interval_general(long t, long k, long n, long l, long q);

// t >= 2 and t-covering number m with t+2 <= m <= k:
//   [m, t] [k, 1]^{m-t-2} [k-t+1, 1]^2 [n-m, k-m].
ExactInt bound_tau_ge_t2(long t, long k, long n, long m, long q);
// The m-free form, valid once n >= 2k+t+1.
ExactInt bound_tau_ge_t2_mfree(long t, long k, long n, long q);

// Imported bounds for the intersecting case (t = 1) with covering number
// 3 <= m <= k.
enum class Tau1Case {
    CoverEqualsK,    // m = k:            [k, 1]^k
    ManyWitnesses,   // m < k, |T| >= 2:  first displayed bound
    SingleWitness,   // m < k, |T| = 1:   second displayed bound
};
ExactInt bound_t1_imported(long k, long n, long m, long q, Tau1Case which);

// Consequence for every 3 <= m < k at once (equals the ManyWitnesses bound
// evaluated at m = 3):
//   (q+1) [k, 1]^2 [n-3, k-3] + q^4 [k, 1] [n-3, k-3].
ExactInt bound_t1_tau_below_k(long k, long n, long q);

// Restriction bound: if some member meets the s-space S in dimension
// r < t then |F_S| <= [k-r, t-r] [n-s-t+r, k-s-t+r].
ExactInt fs_bound(long k, long t, long r, long s, long n, long q);

// Parameter tuple for the constructions; c is the span dimension of the
// h2 flag's top space.
struct Params {
    long n = 0;
    long k = 0;
    long t = 0;
    long q = 2;
    std::optional<long> c;

    // 1 <= t <= k-2 and 2k <= n, the range in which all three
    // constructions are defined and non-trivial.
    bool construction_range_ok() const;
    bool c_ok() const;
};

bool is_prime_power(long q);

// {k+1, ..., 2k-t} followed by n (always distinct from the interval when
// 2k <= n and t >= 1).
std::vector<long> admissible_c(long n, long k, long t);
bool is_admissible_c(long n, long k, long t, long c);

}  // namespace qgrass
