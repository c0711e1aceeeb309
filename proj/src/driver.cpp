#include "divsum/driver.hpp"

#include "divsum/divfree.hpp"
#include "divsum/oracles.hpp"
#include "divsum/region.hpp"

namespace divsum {

namespace {

// tri(v) with negative arguments clamped to an empty count.
Natural tri_or_zero(const Natural& big, const Natural& small) {
    if (big <= small) return 0;
    return triangle(big - small);
}

// sum_{x=x1}^{x2-1} floor(n/x) with hardware division when n fits a word.
Natural quotient_prefix(const Natural& n, const Natural& x1,
                        const Natural& x2, RunStats& stats) {
    if (x2 <= x1) return 0;
    if (fits_u64(n)) {
        std::uint64_t m = to_u64(n), lo = to_u64(x1), hi = to_u64(x2);
        unsigned __int128 total = 0;
        for (std::uint64_t x = lo; x < hi; ++x) total += m / x;
        stats.div_calls += hi - lo;
        return from_u128(total);
    }
    Natural s = 0;
    for (Natural x = x1; x < x2; ++x) {
        s += n / x;
        ++stats.div_calls;
    }
    return s;
}

}  // namespace

Natural s_m_polygon(const Natural& c4, const Natural& c5, const Natural& c2,
                    const Natural& x_min, const Natural& x5) {
    return tri_or_zero(c4, c2 + x_min) - tri_or_zero(c4, c2 + x5) +
           tri_or_zero(c5, c2 + x5);
}

SumResult t_cbrt(const Natural& n, const Config& config) {
    SumResult res;
    if (n < 4) {
        res.value = t_naive(n);
        return res;
    }
    RunStats& stats = res.stats;

    Natural x_max = isqrt_floor(n);
    Natural y_min = n / x_max;
    ++stats.div_calls;
    Natural x_min = icbrt_ceil(2 * n * config.c1 * config.c1 * config.c1);
    if (x_min > x_max) x_min = x_max;

    // Sweep state: line L2 has slope -a2 through (x2, y2), c2 = a2*x2 + y2.
    Natural a2 = 1;
    Natural x2 = x_max;
    Natural y2 = y_min;
    Natural c2 = a2 * x2 + y2;

    Natural s4 = 0;
    for (;;) {
        Natural a1 = a2 + 1;
        Natural x4 = isqrt_floor(n / a1);
        stats.div_calls += 2;
        ++stats.sqrt_calls;
        if (x4 < x_min) break;
        // No progress: the tangent point reached the previous one, so the
        // rest of the strip belongs to the S3 column sum below.
        if (x4 >= x2) break;
        Natural y4 = n / x4;
        Natural c4 = a1 * x4 + y4;
        Natural x5 = x4 + 1;
        Natural y5 = n / x5;
        ++stats.div_calls;
        Natural c5 = a1 * x5 + y5;

        s4 += s_m_polygon(c4, c5, c2, x_min, x5);
        Region region{sub_nonneg(a1 * x2 + y2, c5),
                      sub_nonneg(a2 * x5 + y5, c2),
                      a1,
                      1,
                      c5,
                      a2,
                      1,
                      c2};
        s4 += region_count(region, n, config, stats);

        a2 = a1;
        x2 = x4;
        y2 = y4;
        c2 = c4;
    }

    Natural s1;
    if (config.use_divfree && n > Natural(1) << 16) {
        s1 = s_q(n, 1, x_min - 1, stats);
    } else {
        s1 = quotient_prefix(n, 1, x_min, stats);
    }

    Natural s2 = (x_max - x_min + 1) * y_min + triangle(x_max - x_min);

    // S3: columns between x_min and the last sweep line, hyperbola minus
    // line; the line lies on or below the hyperbola over [x_min, x2).
    Natural s3 = 0;
    if (fits_u64(n) && x2 > x_min) {
        std::uint64_t m = to_u64(n), lo = to_u64(x_min), hi = to_u64(x2);
        std::uint64_t slope = to_u64(a2), yy = to_u64(y2);
        unsigned __int128 total = 0;
        for (std::uint64_t x = lo; x < hi; ++x) {
            std::uint64_t q = m / x;
            unsigned __int128 line =
                static_cast<unsigned __int128>(slope) * (hi - x) + yy;
            DIVSUM_ASSERT(q >= line);
            total += q - static_cast<std::uint64_t>(line);
        }
        stats.div_calls += hi - lo;
        s3 = from_u128(total);
    } else {
        for (Natural x = x_min; x < x2; ++x) {
            Natural line = a2 * (x2 - x) + y2;
            Natural q = n / x;
            ++stats.div_calls;
            DIVSUM_ASSERT(q >= line);
            s3 += q - line;
        }
    }

    res.value = 2 * (s1 + s2 + s3 + s4) - x_max * x_max;
    return res;
}

SumResult t_dispatch(const Natural& n, const Config& config) {
    SumResult res;
    switch (config.method) {
        case Method::Naive:
            res.value = t_naive(n);
            return res;
        case Method::Sqrt:
            res.value = t_sqrt(n);
            return res;
        case Method::Cbrt:
            return t_cbrt(n, config);
    }
    DIVSUM_ASSERT(false);
    return res;
}

}  // namespace divsum
