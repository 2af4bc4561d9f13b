#include "stagefft/executor.hpp"

#include <chrono>
#include <string>

#include "stagefft/error.hpp"
#include "stagefft/kernels.hpp"

namespace stagefft {
namespace {

using Clock = std::chrono::steady_clock;

struct NoTimer {
    void mark_dispatch_done() {}
    void mark_compute_done() {}
};

struct PhaseTimer {
    Clock::time_point start = Clock::now();
    Clock::time_point dispatch_end;
    Clock::time_point compute_end;

    void mark_dispatch_done() { dispatch_end = Clock::now(); }
    void mark_compute_done() { compute_end = Clock::now(); }
};

void validate(const FftPlan& plan, SignalView input) {
    if (input.size() != plan.length()) {
        throw ShapeError("input length " + std::to_string(input.size()) + " does not match plan length " +
                         std::to_string(plan.length()));
    }
    if (!all_finite(input)) {
        throw DomainError("input contains non-finite samples");
    }
}

void apply_scale(SignalBuffer& data, float scale) {
    if (scale == 1.0f) {
        return;
    }
    for (ComplexSample& z : data) {
        z *= scale;
    }
}

template <class Timer>
SignalBuffer run(const FftPlan& plan, SignalView input, Timer& timer) {
    validate(plan, input);
    const std::size_t n = plan.length();
    SignalBuffer result(n);

    if (plan.algorithm() == Algorithm::SplitRadix) {
        timer.mark_dispatch_done();
        split_radix_unscaled(input, result, plan.twiddles(), plan.direction());
        apply_scale(result, plan.scale());
        timer.mark_compute_done();
        return result;
    }

    auto lease = plan.scratch().acquire();
    SignalBuffer& scratch = lease.buffer();

    // Ping-pong so that the final stage writes into `result`.
    const StageList& stages = plan.stages();
    SignalBuffer* src = stages.size() % 2 == 0 ? &result : &scratch;
    SignalBuffer* dst = stages.size() % 2 == 0 ? &scratch : &result;

    const std::vector<std::size_t>& perm = plan.permutation();
    for (std::size_t p = 0; p < n; ++p) {
        (*src)[p] = input[perm[p]];
    }
    timer.mark_dispatch_done();

    std::size_t stride = 1;
    for (std::size_t radix : stages) {
        apply_stage(radix, StageBuffer{*src, *dst, stride}, plan.twiddles(), plan.direction());
        std::swap(src, dst);
        stride *= radix;
    }
    apply_scale(result, plan.scale());
    timer.mark_compute_done();
    return result;
}

double micros(Clock::duration d) { return std::chrono::duration<double, std::micro>(d).count(); }

}  // namespace

SignalBuffer execute(const FftPlan& plan, SignalView input) {
    NoTimer timer;
    return run(plan, input, timer);
}

TimedTransform execute_timed(const FftPlan& plan, SignalView input) {
    PhaseTimer timer;
    TimedTransform timed;
    timed.output = run(plan, input, timer);
    timed.dispatch_us = micros(timer.dispatch_end - timer.start);
    timed.compute_us = micros(timer.compute_end - timer.dispatch_end);
    return timed;
}

}  // namespace stagefft
