#pragma once

#include <complex>
#include <span>
#include <string_view>
#include <vector>

namespace stagefft {

/// Single-precision complex sample; element type of every signal and spectrum.
using ComplexSample = std::complex<float>;

/// Owned sequence of samples. Transforms never modify their input buffer.
using SignalBuffer = std::vector<ComplexSample>;

using SignalView = std::span<const ComplexSample>;

enum class Direction { Forward, Inverse };

enum class Algorithm { MixedRadix, SplitRadix };

std::string_view to_string(Direction direction);
std::string_view to_string(Algorithm algorithm);

// True when every component of every sample is finite.
bool all_finite(SignalView samples);

constexpr bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace stagefft
