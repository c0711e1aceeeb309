#include <doctest.h>

#include <random>

#include "divsum/divfree.hpp"
#include "divsum/oracles.hpp"

using namespace divsum;

TEST_CASE("s_q frozen values") {
    RunStats stats;
    CHECK(s_q(100, 5, 10, stats) == 83);
    CHECK(s_q(100, 7, 7, stats) == 14);
    CHECK(s_q(1, 1, 1, stats) == 1);
    CHECK(s_q(100, 9, 5, stats) == 0);
}

TEST_CASE("s_q full range equals the quotient sum") {
    RunStats stats;
    for (Natural n : {Natural(1), Natural(100), Natural(10000),
                      Natural(1234567)})
        CHECK(s_q(n, 1, n, stats) == t_naive(n));
}

TEST_CASE("s_q random ranges against s_partial") {
    std::mt19937_64 rng(41);
    RunStats stats;
    for (int i = 0; i < 60; ++i) {
        Natural n = from_u64(1 + rng() % 1000000000000ULL);
        Natural x2 = from_u64(1 + rng() % 2000000);
        if (x2 > n) x2 = n;
        Natural span = from_u64(rng() % 5000);
        Natural x1 = x2 > span ? x2 - span : Natural(1);
        CHECK(s_q(n, x1, x2, stats) == s_partial(n, x1, x2));
    }
}

TEST_CASE("s_q ranges straddling the phase boundaries") {
    std::mt19937_64 rng(42);
    RunStats stats;
    for (int i = 0; i < 20; ++i) {
        Natural n = from_u64(1000000 + rng() % 1000000000000ULL);
        Natural b1 = icbrt_ceil(2 * n);
        Natural r6 = isqrt_floor(icbrt_floor(n));
        Natural pad = from_u64(50 + rng() % 200);
        // Across ceil(cbrt(2n)): phase 1 hands off to phase 2 mid-range.
        Natural lo = b1 > pad ? b1 - pad : Natural(1);
        CHECK(s_q(n, lo, b1 + pad, stats) == s_partial(n, lo, b1 + pad));
        // Across n^(1/6): phase 2 hands off to phase 3 mid-range.
        lo = r6 > pad ? r6 - pad : Natural(1);
        CHECK(s_q(n, lo, r6 + pad, stats) == s_partial(n, lo, r6 + pad));
    }
}

TEST_CASE("s_q with x2 near sqrt(n)") {
    RunStats stats;
    Natural n("1000000000000");
    Natural x2 = isqrt_floor(n);
    CHECK(s_q(n, x2 - 100, x2, stats) == s_partial(n, x2 - 100, x2));
    CHECK(s_q(n, 100000, 1000000, stats) == s_partial(n, 100000, 1000000));
}
