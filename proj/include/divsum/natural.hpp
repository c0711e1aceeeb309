#pragma once

#include <gmpxx.h>

#include <cassert>
#include <cstdint>

// Exact unsigned integer primitives. All values are nonnegative by
// convention; subtraction is only performed where the result is known to be
// nonnegative (checked in debug builds via DIVSUM_ASSERT).

#ifndef NDEBUG
#define DIVSUM_ASSERT(cond) assert(cond)
#else
#define DIVSUM_ASSERT(cond) ((void)0)
#endif

namespace divsum {

using Natural = mpz_class;

// Largest r with r*r <= x. Newton's method on integers: start at
// 2^ceil(bits/2), iterate until non-decreasing, correct by +-1 with exact
// multiplication checks.
Natural isqrt_floor(const Natural& x);

// Smallest r with x <= r*r.
Natural isqrt_ceil(const Natural& x);

// Largest r with r^3 <= x.
Natural icbrt_floor(const Natural& x);

// Smallest r with x <= r^3.
Natural icbrt_ceil(const Natural& x);

// i*(i+1)/2, exact.
Natural triangle(const Natural& i);

// a - b with a >= b required.
inline Natural sub_nonneg(const Natural& a, const Natural& b) {
    DIVSUM_ASSERT(a >= b);
    return a - b;
}

inline bool fits_u64(const Natural& x) {
    return sgn(x) >= 0 && mpz_sizeinbase(x.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Natural& x) {
    DIVSUM_ASSERT(fits_u64(x));
    std::uint64_t lo = mpz_get_ui(x.get_mpz_t());
    if (sizeof(unsigned long) >= 8) return lo;
    Natural hi = x >> 32;
    return (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) | lo;
}

inline Natural from_u64(std::uint64_t v) {
    Natural r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline Natural from_u128(unsigned __int128 v) {
    Natural r = from_u64(static_cast<std::uint64_t>(v >> 64));
    r <<= 64;
    r += from_u64(static_cast<std::uint64_t>(v));
    return r;
}

}  // namespace divsum
