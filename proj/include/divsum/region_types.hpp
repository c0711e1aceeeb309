#pragma once

#include "divsum/natural.hpp"

namespace divsum {

// A curvilinear triangular region bounded by two lattice-shifted tangent
// lines L1, L2 and an arc of the hyperbola, in the (u,v) coordinate system
// whose axes are the two lines. Lines have negated slopes a1/b1 and a2/b2
// in the original coordinates, in lowest terms, with
//
//   a1*b2 - b1*a2 = 1   (Farey neighbors, unimodular transform)
//
// and standard-form constants c1, c2. The lattice intersection point
// (x0, y0) = (c1*b2 - b1*c2, a1*c2 - c1*a2) has strictly positive
// coordinates. w and h are the extents along the u and v axes.
struct Region {
    Natural w, h;
    Natural a1, b1, c1;
    Natural a2, b2, c2;
};

inline Natural region_x0(const Region& r) {
    return sub_nonneg(r.c1 * r.b2, r.b1 * r.c2);
}

inline Natural region_y0(const Region& r) {
    return sub_nonneg(r.a1 * r.c2, r.c1 * r.a2);
}

inline bool region_unimodular(const Region& r) {
    return r.a1 * r.b2 - r.b1 * r.a2 == 1;
}

}  // namespace divsum
