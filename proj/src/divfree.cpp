#include "divsum/divfree.hpp"

namespace divsum {

namespace {

// floor(a / b) for signed a, positive b.
Natural fdiv(const Natural& a, const Natural& b) {
    Natural q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

constexpr unsigned kSampleMask = 4095;

}  // namespace

Natural s_q(const Natural& n, const Natural& x1, const Natural& x2,
            RunStats& stats) {
    DIVSUM_ASSERT(x1 >= 1);
    if (x2 < x1) return 0;

    Natural s = 0;
    Natural x = x2;
    // beta = floor(n/(x+1)), eps = n mod (x+1); delta and gamma are the first
    // and second backward differences of beta.
    Natural beta = n / (x + 1);
    Natural eps = n - beta * (x + 1);
    Natural delta = n / x - beta;
    Natural gamma = beta - x * delta;
    stats.div_calls += 2;

    Natural phase1_floor = icbrt_ceil(2 * n);
    Natural r6 = isqrt_floor(icbrt_floor(n));
    Natural gamma_cap = 2 * n / (x1 * x1 + x1);
    if (gamma_cap < x2) gamma_cap = x2;

    // Phase 1: additions and subtractions only. The correction ladder covers
    // delta2 in {-1, 0, 1, 2}; a third upward correction means x has dropped
    // below cbrt(2n) and we leave the phase.
    bool early_exit = false;
    unsigned long column = 0;
    while (x >= x1 && x >= phase1_floor) {
        eps += gamma;
        if (eps >= x) {
            delta += 1;
            gamma -= x;
            eps -= x;
            if (eps >= x) {
                delta += 1;
                gamma -= x;
                eps -= x;
                if (eps >= x) {
                    early_exit = true;
                    break;
                }
            }
        } else if (eps < 0) {
            delta -= 1;
            gamma += x;
            eps += x;
        }
        gamma += 2 * delta;
        beta += delta;
        s += beta;
        x -= 1;
        if ((++column & kSampleMask) == 0) {
            DIVSUM_ASSERT(beta == n / (x + 1));
            DIVSUM_ASSERT(eps == n % (x + 1));
            DIVSUM_ASSERT(abs(gamma) <= gamma_cap);
        }
    }

    if (x >= x1) {
        // Re-synchronize from two exact divisions before the short-division
        // phase; beta survives an early exit untouched.
        // delta/gamma are lagged one column behind in phase 1, so only the
        // remainder is directly comparable.
        Natural eps2 = n - beta * (x + 1);
        stats.div_calls += 1;
        if (!early_exit) {
            DIVSUM_ASSERT(eps2 == eps);
        }
        eps = eps2;
        delta = n / x - beta;
        gamma = beta - x * delta;
    }

    // Phase 2: one short division per column resolves the correction count.
    while (x >= x1 && x > r6) {
        eps += gamma;
        Natural d2 = fdiv(eps, x);
        ++stats.div_calls;
        delta += d2;
        eps -= x * d2;
        gamma += 2 * delta - x * d2;
        beta += delta;
        s += beta;
        x -= 1;
        if ((++column & kSampleMask) == 0) {
            DIVSUM_ASSERT(beta == n / (x + 1));
            DIVSUM_ASSERT(eps == n % (x + 1));
            DIVSUM_ASSERT(abs(gamma) <= gamma_cap);
        }
    }

    // Phase 3: plain division below the sixth root.
    while (x >= x1) {
        s += n / x;
        ++stats.div_calls;
        x -= 1;
    }

    return s;
}

}  // namespace divsum
