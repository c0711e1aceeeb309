#include "divsum/natural.hpp"

namespace divsum {

namespace {

std::size_t bit_length(const Natural& x) {
    return x == 0 ? 0 : mpz_sizeinbase(x.get_mpz_t(), 2);
}

}  // namespace

Natural isqrt_floor(const Natural& x) {
    DIVSUM_ASSERT(sgn(x) >= 0);
    if (x < 2) return x;
    // 2^ceil(bits/2) >= sqrt(x), so Newton converges from above.
    Natural r = 1;
    r <<= (bit_length(x) + 1) / 2;
    for (;;) {
        Natural next = (r + x / r) >> 1;
        if (next >= r) break;
        r = next;
    }
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    DIVSUM_ASSERT(r * r <= x && (r + 1) * (r + 1) > x);
    return r;
}

Natural isqrt_ceil(const Natural& x) {
    Natural r = isqrt_floor(x);
    if (r * r != x) ++r;
    DIVSUM_ASSERT(r * r >= x && (r == 0 || (r - 1) * (r - 1) < x));
    return r;
}

Natural icbrt_floor(const Natural& x) {
    DIVSUM_ASSERT(sgn(x) >= 0);
    if (x < 2) return x;
    Natural r = 1;
    r <<= bit_length(x) / 3 + 1;  // guarantees r^3 > x
    for (;;) {
        Natural next = (2 * r + x / (r * r)) / 3;
        if (next >= r) break;
        r = next;
    }
    while (r * r * r > x) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= x) ++r;
    DIVSUM_ASSERT(r * r * r <= x && (r + 1) * (r + 1) * (r + 1) > x);
    return r;
}

Natural icbrt_ceil(const Natural& x) {
    Natural r = icbrt_floor(x);
    if (r * r * r != x) ++r;
    DIVSUM_ASSERT(r * r * r >= x && (r == 0 || (r - 1) * (r - 1) * (r - 1) < x));
    return r;
}

Natural triangle(const Natural& i) {
    DIVSUM_ASSERT(sgn(i) >= 0);
    return (i * (i + 1)) >> 1;
}

}  // namespace divsum
