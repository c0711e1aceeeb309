#pragma once

#include <utility>
#include <vector>

#include "divsum/config.hpp"
#include "divsum/natural.hpp"
#include "divsum/region_types.hpp"
#include "divsum/stats.hpp"

namespace divsum {

// H(u,v) = (b2(u+c1) - b1(v+c2)) * (a1(v+c2) - a2(u+c1)), the hyperbola in
// region coordinates. Both factors must be nonnegative (first-quadrant
// precondition); violations are caller bugs.
Natural h_eval(const Region& region, const Natural& u, const Natural& v);

// x = b2(u+c1) - b1(v+c2), y = a1(v+c2) - a2(u+c1).
std::pair<Natural, Natural> uv_to_xy(const Region& region, const Natural& u,
                                     const Natural& v);

// u = a1*x + b1*y - c1, v = a2*x + b2*y - c2.
std::pair<Natural, Natural> xy_to_uv(const Region& region, const Natural& x,
                                     const Natural& y);

// u coordinate of the lattice point just left of the slope -1 tangent point:
// floor(sqrt(floor((a1b2 + b1a2 + 2a1b1)^2 * n / (a3*b3)))) - c1 with
// a3 = a1+a2, b3 = b1+b2. May be 0 (degenerate; caller falls back to manual
// counting).
Natural u_tan(const Region& region, const Natural& n);

// Largest v with H(u,v) <= n on the near branch:
// floor(((a1b2 + b1a2)(u+c1) - ceil(sqrt((u+c1)^2 - 4a1b1n))) / (2a1b1)) - c2.
// Throws std::domain_error when the discriminant would be negative (the
// curve does not reach column u).
Natural v_floor(const Region& region, const Natural& u, const Natural& n);

// Mirror of v_floor with subscripts 1 and 2 exchanged (final subtraction c1).
Natural u_floor(const Region& region, const Natural& v, const Natural& n);

// Lattice points above the axes inside the polygon P0 P6 P4 P5 P7, counted
// on reverse diagonals. v6 = u4 + v4 and u7 = u5 + v5 for the tangent pair.
Natural s_n_polygon(const Natural& v6, const Natural& u7, const Natural& u4,
                    const Natural& v5);

// Manual column summation axis: U sums v_floor over u = 1..w-1 (S_W),
// V sums u_floor over v = 1..h-1 (S_H).
enum class Axis { U, V };

// Incremental small-region sum: one ceiling square root and one division per
// lattice column, everything else additions.
Natural s_manual(const Region& region, const Natural& n, Axis axis,
                 RunStats& stats);

// Exact lattice-point count of the region, equal to region_brute(region, n).
// Tangent-tangent-chop subdivision driven by an explicit LIFO work stack;
// throws std::runtime_error if the stack ever exceeds 4*log2(n) + 64 items
// (unreachable for valid inputs).
Natural region_count(const Region& region, const Natural& n,
                     const Config& config, RunStats& stats);

namespace testing {

// Test instrumentation: while a sink is installed on the current thread,
// every region popped from any region_count work stack is recorded.
struct TraceEntry {
    Region region;
    bool terminal;  // counted manually rather than subdivided
};

class RegionTraceScope {
public:
    explicit RegionTraceScope(std::vector<TraceEntry>& sink);
    ~RegionTraceScope();
    RegionTraceScope(const RegionTraceScope&) = delete;
    RegionTraceScope& operator=(const RegionTraceScope&) = delete;

private:
    std::vector<TraceEntry>* previous_;
};

}  // namespace testing

}  // namespace divsum
