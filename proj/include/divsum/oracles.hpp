#pragma once

#include "divsum/natural.hpp"
#include "divsum/region_types.hpp"

namespace divsum {

// Slow, obviously-correct reference implementations used as ground truth.
// None of these share code with the fast paths they validate.

struct HyperbolaSum {
    Natural n;
    Natural total;  // sum_{x=1..n} floor(n/x)
};

// T(n) by direct column summation, O(n).
Natural t_naive(const Natural& n);

// T(n) = 2*sum_{x<=floor(sqrt(n))} floor(n/x) - floor(sqrt(n))^2, O(sqrt n).
Natural t_sqrt(const Natural& n);

// S(n, x1, x2) = sum_{x=x1..x2} floor(n/x); 0 when x2 < x1. Requires x1 >= 1.
Natural s_partial(const Natural& n, const Natural& x1, const Natural& x2);

// Number of divisors of x; rejects x = 0.
Natural tau(const Natural& x);

// Lattice points (u,v), 1 <= u <= w, 1 <= v <= h, with H(u,v) <= n, by
// exhaustive double loop over the transformed-coordinate box.
Natural region_brute(const Region& region, const Natural& n);

// Triples (x,y,z) of positive integers with xyz <= n.
Natural t3_brute(const Natural& n);

}  // namespace divsum
