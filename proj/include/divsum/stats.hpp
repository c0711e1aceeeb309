#pragma once

#include <cstdint>

namespace divsum {

// Counters accumulated during a computation. They instrument the scaling
// behavior of the algorithm (region counts, stack depth) and the cost model
// (divisions, square roots, manually summed columns).
struct RunStats {
    std::uint64_t regions_processed = 0;
    std::uint64_t max_stack_depth = 0;
    std::uint64_t manual_columns = 0;
    std::uint64_t sqrt_calls = 0;
    std::uint64_t div_calls = 0;

    RunStats& operator+=(const RunStats& o) {
        regions_processed += o.regions_processed;
        if (o.max_stack_depth > max_stack_depth)
            max_stack_depth = o.max_stack_depth;
        manual_columns += o.manual_columns;
        sqrt_calls += o.sqrt_calls;
        div_calls += o.div_calls;
        return *this;
    }
};

}  // namespace divsum
