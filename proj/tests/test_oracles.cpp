#include <doctest.h>

#include <random>
#include <stdexcept>

#include "divsum/oracles.hpp"

using namespace divsum;

TEST_CASE("t_naive frozen values") {
    CHECK(t_naive(0) == 0);
    CHECK(t_naive(1) == 1);
    CHECK(t_naive(10) == 27);
    CHECK(t_naive(100) == 482);
}

TEST_CASE("t_sqrt frozen values") {
    CHECK(t_sqrt(0) == 0);
    CHECK(t_sqrt(1) == 1);
    CHECK(t_sqrt(10) == 27);
    CHECK(t_sqrt(100) == 482);
}

TEST_CASE("t_naive equals t_sqrt exhaustively") {
    for (Natural n = 0; n <= 10000; ++n) CHECK(t_naive(n) == t_sqrt(n));
}

TEST_CASE("t_naive equals t_sqrt on random large n") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        Natural n = from_u64(rng() % 1000000000ULL);
        CHECK(t_naive(n) == t_sqrt(n));
    }
}

TEST_CASE("s_partial") {
    CHECK(s_partial(10, 2, 3) == 8);
    CHECK(s_partial(10, 5, 4) == 0);
    CHECK(s_partial(100, 1, 100) == 482);
    for (Natural n = 0; n <= 2000; n += 37)
        CHECK(s_partial(n, 1, n) == t_naive(n));
}

TEST_CASE("tau") {
    CHECK(tau(1) == 1);
    CHECK(tau(6) == 4);
    CHECK(tau(12) == 6);
    CHECK_THROWS_AS(tau(0), std::invalid_argument);
    Natural acc = 0;
    for (Natural x = 1; x <= 2000; ++x) {
        acc += tau(x);
        CHECK(acc == t_naive(x));
    }
}

TEST_CASE("region_brute degenerate boxes") {
    Region r{0, 5, 2, 1, 28, 1, 1, 20};
    CHECK(region_brute(r, 100) == 0);
    r.w = 5;
    r.h = 0;
    CHECK(region_brute(r, 100) == 0);
}

TEST_CASE("region_brute on the sample region") {
    Region r{2, 2, 2, 1, 28, 1, 1, 20};
    // H over the box {1,2}^2: H(1,1)=(29-21)(42-29)=104, H(1,2)=(29-22)(44-29)=105,
    // H(2,1)=(30-21)(42-30)=108, H(2,2)=(30-22)(44-30)=112.
    CHECK(region_brute(r, 100) == 0);
    CHECK(region_brute(r, 104) == 1);
    CHECK(region_brute(r, 105) == 2);
    CHECK(region_brute(r, 112) == 4);
}

TEST_CASE("t3_brute") {
    CHECK(t3_brute(0) == 0);
    CHECK(t3_brute(1) == 1);
    CHECK(t3_brute(10) == 53);
    // Cross-check against the T-based identity T3(n) = sum_z T(floor(n/z)).
    for (Natural n : {Natural(2), Natural(30), Natural(100)}) {
        Natural s = 0;
        for (Natural z = 1; z <= n; ++z) s += t_naive(n / z);
        CHECK(t3_brute(n) == s);
    }
}
