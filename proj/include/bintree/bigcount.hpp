#pragma once

#include <gmpxx.h>

#include <string>

namespace bintree {

// Subtree counts grow like 2^(n/2); everything downstream compares them as
// exact rationals, so all counting arithmetic stays in arbitrary precision.
using BigCount = mpz_class;
using ExactRatio = mpq_class;

inline ExactRatio make_ratio(const BigCount& num, const BigCount& den) {
    ExactRatio r(num, den);
    r.canonicalize();
    return r;
}

// Always renders as "p/q", even for integral values.
inline std::string ratio_str(const ExactRatio& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline BigCount pow2(unsigned long e) {
    BigCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

}  // namespace bintree
