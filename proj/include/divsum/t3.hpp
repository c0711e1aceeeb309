#pragma once

#include "divsum/config.hpp"
#include "divsum/natural.hpp"

namespace divsum {

// Per-shell terms of the three-dimensional divisor sum decomposition. The
// shell z contributes 3*(2*s_term - sqrt_term + div_term); the final
// floor(cbrt(n))^3 is added once.
struct T3Terms {
    Natural z;
    Natural s_term;     // S(floor(n/z), z+1, floor(sqrt(n/z)))
    Natural sqrt_term;  // floor(sqrt(n/z))^2
    Natural div_term;   // floor(n/z^2)
};

// T3(n) = #{(x,y,z) positive, xyz <= n} via shell decomposition:
// 3 * sum_{z<=cbrt(n)} (2*S(floor(n/z), z+1, floor(sqrt(n/z)))
//                       - floor(sqrt(n/z))^2 + floor(n/z^2)) + floor(cbrt(n))^3.
SumResult t3(const Natural& n, const Config& config);

// S(n, x1, floor(sqrt(n))) through the fast sweep: (T(n) + floor(sqrt(n))^2)/2
// minus the manually summed prefix, or a direct division loop when n is
// small. Requires x2 == floor(sqrt(n)); rejects anything else.
Natural s_fast_partial(const Natural& n, const Natural& x1, const Natural& x2,
                       const Config& config);

}  // namespace divsum
