#pragma once

#include "divsum/config.hpp"
#include "divsum/natural.hpp"

namespace divsum {

// T(n) in O(n^(1/3)) time: manual summation below x_min, a rectangle plus
// triangle base count, one region per pair of adjacent integral slopes, and
// the hyperbola symmetry 2*(S1+S2+S3+S4) - floor(sqrt(n))^2.
SumResult t_cbrt(const Natural& n, const Config& config);

// Lattice points in the polygon M above line L2 for one sweep iteration:
// tri(c4-c2-x_min) - tri(c4-c2-x5) + tri(c5-c2-x5), each term taken as 0
// when its argument would be negative (empty polygon portion).
Natural s_m_polygon(const Natural& c4, const Natural& c5, const Natural& c2,
                    const Natural& x_min, const Natural& x5);

// Routes to t_naive / t_sqrt / t_cbrt per config.method.
SumResult t_dispatch(const Natural& n, const Config& config);

}  // namespace divsum
