#include "qgrass/counts.hpp"

#include <stdexcept>
#include <string>

namespace qgrass {

namespace {

void require(bool cond, const std::string& msg) {
    if (!cond) throw std::invalid_argument(msg);
}

unsigned long as_exp(long v) {
    return static_cast<unsigned long>(v);
}

}  // namespace

ExactInt gauss_binom(long a, long b, long q) {
    require(a >= 0, "gauss_binom: a must be nonnegative");
    require(q >= 2, "gauss_binom: q must be at least 2");
    if (b < 0 || b > a) return 0;
    if (b == 0) return 1;
    ExactInt r = 1;
    for (long i = 1; i <= b; ++i) {
        r *= q_pow_m1(q, as_exp(a - b + i));
        ExactInt d = q_pow_m1(q, as_exp(i));
        // exact by the partial-product invariant r = [a-b+i, i]
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), d.get_mpz_t());
    }
    return r;
}

ExactInt gauss_binom_pascal(long a, long b, long q) {
    require(a >= 0, "gauss_binom_pascal: a must be nonnegative");
    require(q >= 2, "gauss_binom_pascal: q must be at least 2");
    if (b < 0 || b > a) return 0;
    if (b == 0 || b == a) return 1;
    // row m of the table holds [m, i] for 0 <= i <= min(m, b)
    std::vector<ExactInt> row(static_cast<size_t>(b) + 1);
    row[0] = 1;
    for (long m = 1; m <= a; ++m) {
        long top = std::min(m, b);
        for (long i = top; i >= 1; --i) {
            ExactInt upper = (i <= m - 1) ? row[static_cast<size_t>(i)] : ExactInt(0);
            row[static_cast<size_t>(i)] = row[static_cast<size_t>(i - 1)] + q_pow(q, as_exp(i)) * upper;
        }
    }
    return row[static_cast<size_t>(b)];
}

ExactInt type_count(long m, long h, long e, long l, long q) {
    require(e >= 1 && l >= 1, "type_count: e and l must be positive");
    if (h < 0 || h > l || m - h < 0 || m - h > e) return 0;
    return q_pow(q, as_exp((m - h) * (l - h))) * gauss_binom(e, m - h, q) * gauss_binom(l, h, q);
}

ExactInt containing_count(long m1, long h1, long m, long h, long e, long l, long q) {
    require(e >= 1 && l >= 1, "containing_count: e and l must be positive");
    if (h1 < 0 || h1 > h || h > l) return 0;
    if (m1 - h1 < 0 || m1 - h1 > m - h || m - h > e) return 0;
    return q_pow(q, as_exp((l - h) * (m - h - m1 + h1))) *
           gauss_binom(e - (m1 - h1), (m - h) - (m1 - h1), q) * gauss_binom(l - h1, h - h1, q);
}

ExactInt f_threshold(long n, long k, long t, long q) {
    return gauss_binom(k - t, 1, q) * gauss_binom(n - t - 1, k - t - 1, q) -
           q * gauss_binom(k - t, 2, q) * gauss_binom(n - t - 2, k - t - 2, q);
}

ExactInt g1(long t, long n, long q) {
    return gauss_binom(t + 2, 1, q) * gauss_binom(n - t - 1, t + 1, q) -
           q * gauss_binom(t + 1, 1, q) * gauss_binom(n - t - 2, t, q);
}

ExactInt g2(long t, long n, long q) {
    return gauss_binom(n - t, t + 2, q) -
           q_pow(q, as_exp((t + 2) * (t + 2))) * gauss_binom(n - 2 * t - 2, t + 2, q);
}

ExactInt g_diff_sum(long t, long n, long q) {
    ExactInt s = 0;
    for (long j = 1; j <= t; ++j) {
        s += q_pow(q, as_exp(j * (t + 2) + 1)) * gauss_binom(t + 1 - j, 1, q) *
             gauss_binom(n - t - 2 - j, t, q);
    }
    return s;
}

ExactInt h1_size(long t, long k, long n, long q) {
    return gauss_binom(n - t, k - t, q) -
           q_pow(q, as_exp((k + 1 - t) * (k - t))) * gauss_binom(n - k - 1, k - t, q) +
           q_pow(q, as_exp(k + 1 - t)) * gauss_binom(t, 1, q);
}

H2Addends h2_addends(long t, long k, long c, long n, long q) {
    require(is_admissible_c(n, k, t, c),
            "h2_addends: c must lie in {k+1, ..., 2k-t} or equal n");
    H2Addends out;
    out.a = gauss_binom(n - t, k - t, q) -
            q_pow(q, as_exp((k - t) * (k - t))) * gauss_binom(n - k, k - t, q);
    out.b = q_pow(q, as_exp((k - t) * (k - t))) * gauss_binom(n - c, 2 * k - c - t, q);
    out.c = q_pow(q, as_exp(k - t + 1)) * gauss_binom(c - k, 1, q) * gauss_binom(t, 1, q);
    return out;
}

ExactInt h2_size(long t, long k, long c, long n, long q) {
    return h2_addends(t, k, c, n, q).total();
}

ExactInt h3_size(long t, long k, long n, long q) {
    return gauss_binom(t + 2, 1, q) * gauss_binom(n - t - 1, k - t - 1, q) -
           q * gauss_binom(t + 1, 1, q) * gauss_binom(n - t - 2, k - t - 2, q);
}

ExactInt bound_tau1_single(long t, long k, long n, long q) {
    return gauss_binom(n - t - 1, k - t - 1, q) +
           q * gauss_binom(t + 1, 1, q) * gauss_binom(k - t, 1, q) * gauss_binom(k - t + 1, 1, q) *
               gauss_binom(n - t - 2, k - t - 2, q);
}

ExactInt bound_tau1_interval_general(long t, long k, long n, long l, long q) {
    require(t + 1 <= l && l <= k + 1, "bound_tau1_interval: l must satisfy t+1 <= l <= k+1");
    return gauss_binom(l - t, 1, q) * gauss_binom(n - t - 1, k - t - 1, q) +
           q_pow(q, as_exp(l - t)) * gauss_binom(k - l + 1, 1, q) * gauss_binom(k - t + 1, 1, q) *
               gauss_binom(n - t - 2, k - t - 2, q) +
           q_pow(q, as_exp(k + 1 - t)) * gauss_binom(t, 1, q) * gauss_binom(n - l, k - l + 1, q);
}

ExactInt bound_tau1_interval(long t, long k, long n, long l, long q) {
    if (l != t + 2) return bound_tau1_interval_general(t, k, n, l, q);
    return gauss_binom(l - t, 1, q) * gauss_binom(n - t - 1, k - t - 1, q) +
           q_pow(q, as_exp(l - t)) * gauss_binom(k - l + 1, 1, q) * gauss_binom(k - t + 1, 1, q) *
               gauss_binom(n - t - 2, k - t - 2, q) +
           q * q * gauss_binom(t, 1, q) * gauss_binom(k - t + 1, 1, q) *
               gauss_binom(n - t - 2, k - t - 2, q);
}

ExactInt bound_tau_ge_t2(long t, long k, long n, long m, long q) {
    require(t >= 2, "bound_tau_ge_t2: t must be at least 2");
    require(t + 2 <= m && m <= k, "bound_tau_ge_t2: m must satisfy t+2 <= m <= k");
    require(n >= 2 * k, "bound_tau_ge_t2: n must be at least 2k");
    ExactInt kt1 = gauss_binom(k - t + 1, 1, q);
    return gauss_binom(m, t, q) * pow_exact(gauss_binom(k, 1, q), as_exp(m - t - 2)) * kt1 * kt1 *
           gauss_binom(n - m, k - m, q);
}

ExactInt bound_tau_ge_t2_mfree(long t, long k, long n, long q) {
    require(t >= 2, "bound_tau_ge_t2_mfree: t must be at least 2");
    require(n >= 2 * k + t + 1, "bound_tau_ge_t2_mfree: requires n >= 2k+t+1");
    ExactInt kt1 = gauss_binom(k - t + 1, 1, q);
    return gauss_binom(t + 2, 2, q) * kt1 * kt1 * gauss_binom(n - t - 2, k - t - 2, q);
}

ExactInt bound_t1_imported(long k, long n, long m, long q, Tau1Case which) {
    require(3 <= m && m <= k, "bound_t1_imported: m must satisfy 3 <= m <= k");
    ExactInt k1 = gauss_binom(k, 1, q);
    switch (which) {
        case Tau1Case::CoverEqualsK:
            require(m == k, "bound_t1_imported: CoverEqualsK needs m = k");
            return pow_exact(k1, as_exp(k));
        case Tau1Case::ManyWitnesses:
            require(m < k, "bound_t1_imported: ManyWitnesses needs m < k");
            return gauss_binom(m - 1, 1, q) * pow_exact(k1, as_exp(m - 1)) *
                       gauss_binom(n - m, k - m, q) +
                   q_pow(q, as_exp(2 * (m - 1))) * pow_exact(k1, as_exp(m - 2)) *
                       gauss_binom(n - m, k - m, q);
        case Tau1Case::SingleWitness:
            require(m < k, "bound_t1_imported: SingleWitness needs m < k");
            return gauss_binom(m - 1, 1, q) * gauss_binom(m, 1, q) * pow_exact(k1, as_exp(m - 2)) *
                       gauss_binom(n - m, k - m, q) +
                   q_pow(q, as_exp(m - 1)) * gauss_binom(k - m + 1, 1, q) * gauss_binom(m, 1, q) *
                       pow_exact(k1, as_exp(m - 1)) * gauss_binom(n - m - 1, k - m - 1, q);
    }
    throw std::logic_error("bound_t1_imported: unreachable");
}

ExactInt bound_t1_tau_below_k(long k, long n, long q) {
    ExactInt k1 = gauss_binom(k, 1, q);
    return (ExactInt(q) + 1) * k1 * k1 * gauss_binom(n - 3, k - 3, q) +
           q_pow(q, 4) * k1 * gauss_binom(n - 3, k - 3, q);
}

ExactInt fs_bound(long k, long t, long r, long s, long n, long q) {
    require(t - 1 <= s && s <= k - 1, "fs_bound: s must satisfy t-1 <= s <= k-1");
    require(0 <= r && r < t, "fs_bound: r must satisfy 0 <= r < t");
    return gauss_binom(k - r, t - r, q) * gauss_binom(n - s - t + r, k - s - t + r, q);
}

bool Params::construction_range_ok() const {
    return is_prime_power(q) && t >= 1 && t <= k - 2 && 2 * k <= n;
}

bool Params::c_ok() const {
    return !c.has_value() || is_admissible_c(n, k, t, *c);
}

bool is_prime_power(long q) {
    if (q < 2) return false;
    long p = 2;
    while (p * p <= q) {
        if (q % p == 0) break;
        ++p;
    }
    if (p * p > q) return true;  // q itself is prime
    while (q % p == 0) q /= p;
    return q == 1;
}

std::vector<long> admissible_c(long n, long k, long t) {
    std::vector<long> out;
    for (long c = k + 1; c <= 2 * k - t; ++c) out.push_back(c);
    if (n > 2 * k - t) out.push_back(n);
    return out;
}

bool is_admissible_c(long n, long k, long t, long c) {
    return (c >= k + 1 && c <= 2 * k - t) || c == n;
}

}  // namespace qgrass
