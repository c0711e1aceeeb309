#pragma once

#include "divsum/natural.hpp"
#include "divsum/stats.hpp"

namespace divsum {

// S_Q(n, x1, x2) = sum_{x=x1..x2} floor(n/x), computed backwards from x2
// with a Bresenham-style second-order finite-difference recurrence:
//   phase 1 (x >= ceil(cbrt(2n))): additions and subtractions only;
//   phase 2 (x above the sixth root): one short division per column;
//   phase 3: ordinary division per column.
// Requires 1 <= x1; returns 0 when x2 < x1.
Natural s_q(const Natural& n, const Natural& x1, const Natural& x2,
            RunStats& stats);

}  // namespace divsum
