#pragma once

#include "stagefft/planner.hpp"
#include "stagefft/types.hpp"

namespace stagefft {

/// Runs `plan` on `input` out of place and returns the transformed buffer,
/// scaled by plan.scale(). Throws ShapeError on a length mismatch and
/// DomainError on non-finite input. Safe to call concurrently with a shared
/// plan.
SignalBuffer execute(const FftPlan& plan, SignalView input);

struct TimedTransform {
    SignalBuffer output;
    // Validation, scratch acquisition and digit-reversal permutation.
    double dispatch_us = 0.0;
    // Butterfly stages (or split-radix recursion) plus normalization.
    double compute_us = 0.0;

    double total_us() const noexcept { return dispatch_us + compute_us; }
};

/// Same result as execute(), bit for bit, with the two phases timed on a
/// monotonic clock.
TimedTransform execute_timed(const FftPlan& plan, SignalView input);

}  // namespace stagefft
