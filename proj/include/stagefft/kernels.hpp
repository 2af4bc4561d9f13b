#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

#include "stagefft/numerics.hpp"
#include "stagefft/planner.hpp"
#include "stagefft/types.hpp"

namespace stagefft {

/// One breadth-first DIT stage, read from `in` and written to `out`.
///
/// The buffer holds consecutive blocks of `stride` points per sub-transform;
/// a radix-r stage merges r such sub-transforms into one of length
/// r * stride. Element k of sub-transform j is multiplied by
/// omega_{r*stride}^{j*k} (looked up in `twiddles`, conjugated for the
/// inverse direction) and the r-tuple then goes through an r-point DFT whose
/// only constants are +-1, +-i and, for radix 8, (+-1 +- i)/sqrt(2).
///
/// Stage 0 uses stride 1 and expects digit-reversed input. Throws InvalidPlan
/// if the buffers differ in size, their length is not a multiple of
/// r * stride, or the twiddle table length is not a multiple of r * stride.
struct StageBuffer {
    SignalView in;
    std::span<ComplexSample> out;
    std::size_t stride = 1;
};

void radix2_stage(const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction);
void radix4_stage(const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction);
void radix8_stage(const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction);

// Dispatches on radix (2, 4 or 8).
void apply_stage(std::size_t radix, const StageBuffer& buf, const TwiddleTable& twiddles,
                 Direction direction);

/// Twiddle pair consumed by one split-radix L-butterfly: w1 = omega_n^k and
/// w3 = omega_n^{3k} (already conjugated for the inverse direction).
struct TwiddleUse {
    std::size_t n;
    std::size_t k;
    ComplexSample w1;
    ComplexSample w3;
};

using TwiddleProbe = std::function<void(const TwiddleUse&)>;

/// Recursive split-radix DFT of `input` into `output` without normalization.
/// `output` must not alias `input`. The table length must be a multiple of
/// the input length. An optional probe observes every twiddle pair used.
void split_radix_unscaled(SignalView input, std::span<ComplexSample> output, const TwiddleTable& twiddles,
                          Direction direction, const TwiddleProbe& probe = {});

/// Split-radix transform of a power-of-two length signal. The inverse
/// direction conjugates twiddles and applies 1/N at the end. Throws
/// InvalidLength for empty or non-power-of-two input.
SignalBuffer split_radix_transform(SignalView input, const TwiddleTable& twiddles, Direction direction,
                                   const TwiddleProbe& probe = {});

/// Two-input butterfly equivalents executed by a stage pipeline: a radix-r
/// stage on N points costs (N/r) * (r/2) * log2(r).
std::uint64_t count_butterflies(const StageList& stages);

/// Two-input butterflies executed by the split-radix recursion on n points.
std::uint64_t count_split_radix_butterflies(std::size_t n);

std::uint64_t count_butterflies(const FftPlan& plan);

}  // namespace stagefft
