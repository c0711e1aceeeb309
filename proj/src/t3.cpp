#include "divsum/t3.hpp"

#include <stdexcept>

#include "divsum/driver.hpp"
#include "divsum/oracles.hpp"

namespace divsum {

namespace {

// S(n, x1, floor(sqrt(n))) = (T(n) + floor(sqrt(n))^2)/2 - S(n, 1, x1-1).
// Below the threshold where the sweep pays off, a direct loop is cheaper.
Natural s_suffix(const Natural& n, const Natural& x1, const Natural& x2,
                 const Config& config, RunStats& stats) {
    if (x1 > x2) return 0;
    Natural c1_6 = config.c1 * config.c1 * config.c1;
    c1_6 *= c1_6;
    if (n < 4 * c1_6) {
        Natural s = 0;
        for (Natural x = x1; x <= x2; ++x) {
            s += n / x;
            ++stats.div_calls;
        }
        return s;
    }
    SumResult full = t_cbrt(n, config);
    stats += full.stats;
    Natural prefix = s_partial(n, 1, x1 - 1);
    if (x1 > 1) stats.div_calls += to_u64(x1 - 1);
    return (full.value + x2 * x2) / 2 - prefix;
}

}  // namespace

Natural s_fast_partial(const Natural& n, const Natural& x1, const Natural& x2,
                       const Config& config) {
    if (x2 != isqrt_floor(n))
        throw std::invalid_argument("s_fast_partial: x2 must be isqrt(n)");
    RunStats stats;
    return s_suffix(n, x1, x2, config, stats);
}

SumResult t3(const Natural& n, const Config& config) {
    SumResult res;
    res.value = 0;
    Natural m = icbrt_floor(n);
    for (Natural z = 1; z <= m; ++z) {
        Natural nz = n / z;
        Natural root = isqrt_floor(nz);
        res.stats.div_calls += 2;
        ++res.stats.sqrt_calls;
        Natural s_term = s_suffix(nz, z + 1, root, config, res.stats);
        res.value += 2 * s_term - root * root + n / (z * z);
    }
    res.value = 3 * res.value + m * m * m;
    return res;
}

}  // namespace divsum
