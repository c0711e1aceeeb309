#pragma once

#include "divsum/natural.hpp"
#include "divsum/stats.hpp"

namespace divsum {

enum class Method { Naive, Sqrt, Cbrt };

// Tuning constants and method selection. c1 scales the manual-summation
// cutoff x_min; c2 is the small-region cutoff below which columns are summed
// directly. Both tune performance only and never change results.
struct Config {
    Natural c1{10};
    Natural c2{10};
    Method method = Method::Cbrt;
    bool use_divfree = false;
};

struct SumResult {
    Natural value;
    RunStats stats;
};

}  // namespace divsum
