#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace qgrass {

// Every count, size and bound in the toolkit is an exact integer.  GMP keeps
// the arithmetic overflow-free; the signed type is needed only for
// differences when comparing two counts.
using ExactInt = mpz_class;

inline ExactInt q_pow(long q, unsigned long e) {
    ExactInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(q), e);
    return r;
}

// q^e - 1, the ubiquitous factor in subspace counts.
inline ExactInt q_pow_m1(long q, unsigned long e) {
    return q_pow(q, e) - 1;
}

inline ExactInt pow_exact(const ExactInt& base, unsigned long e) {
    ExactInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Three-way sign of a - b; all inequality checks go through this so that no
// comparison ever leaves exact integer arithmetic.
inline int compare_exact(const ExactInt& a, const ExactInt& b) {
    return cmp(a, b);
}

}  // namespace qgrass
