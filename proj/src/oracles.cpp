#include "divsum/oracles.hpp"

#include <stdexcept>

namespace divsum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Quotient sums over word-sized n run with hardware division; the sum of
// floor(n/x) over any range fits 128 bits for n < 2^64.
Natural sum_quotients_u64(u64 n, u64 x1, u64 x2) {
    u128 total = 0;
    for (u64 x = x1; x <= x2; ++x) total += n / x;
    return from_u128(total);
}

Natural sum_quotients_mpz(const Natural& n, const Natural& x1,
                          const Natural& x2) {
    Natural total = 0;
    for (Natural x = x1; x <= x2; ++x) total += n / x;
    return total;
}

}  // namespace

Natural t_naive(const Natural& n) {
    if (n == 0) return 0;
    if (fits_u64(n)) return sum_quotients_u64(to_u64(n), 1, to_u64(n));
    return sum_quotients_mpz(n, 1, n);
}

Natural t_sqrt(const Natural& n) {
    if (n == 0) return 0;
    Natural root = isqrt_floor(n);
    Natural s = fits_u64(n) ? sum_quotients_u64(to_u64(n), 1, to_u64(root))
                            : sum_quotients_mpz(n, 1, root);
    return 2 * s - root * root;
}

Natural s_partial(const Natural& n, const Natural& x1, const Natural& x2) {
    DIVSUM_ASSERT(x1 >= 1);
    if (x2 < x1) return 0;
    if (fits_u64(n)) return sum_quotients_u64(to_u64(n), to_u64(x1), to_u64(x2));
    return sum_quotients_mpz(n, x1, x2);
}

Natural tau(const Natural& x) {
    if (x == 0) throw std::invalid_argument("tau: x must be positive");
    Natural count = 0;
    Natural d = 1;
    for (; d * d < x; ++d) {
        if (x % d == 0) count += 2;
    }
    if (d * d == x) ++count;
    return count;
}

Natural region_brute(const Region& region, const Natural& n) {
    DIVSUM_ASSERT(region_unimodular(region));
    Natural count = 0;
    // H(u,v) per the transformed-coordinate formula, evaluated point by
    // point; deliberately independent of the engine's column formulas.
    for (Natural u = 1; u <= region.w; ++u) {
        for (Natural v = 1; v <= region.h; ++v) {
            Natural fx = region.b2 * (u + region.c1) - region.b1 * (v + region.c2);
            Natural fy = region.a1 * (v + region.c2) - region.a2 * (u + region.c1);
            DIVSUM_ASSERT(sgn(fx) >= 0 && sgn(fy) >= 0);
            if (fx * fy <= n) ++count;
        }
    }
    return count;
}

Natural t3_brute(const Natural& n) {
    if (n == 0) return 0;
    DIVSUM_ASSERT(fits_u64(n));
    u64 m = to_u64(n);
    u128 total = 0;
    for (u64 x = 1; x <= m; ++x) {
        u64 q = m / x;
        for (u64 y = 1; y <= q; ++y) total += q / y;  // #{z : xyz <= n}
    }
    return from_u128(total);
}

}  // namespace divsum
