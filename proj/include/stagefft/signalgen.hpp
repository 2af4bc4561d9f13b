#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "stagefft/types.hpp"

namespace stagefft {

enum class SignalKind { Ramp, Impulse, Constant, Random };

std::string_view to_string(SignalKind kind);
std::optional<SignalKind> parse_signal_kind(std::string_view name);

/// SplitMix64 finalizer applied to seed + (index + 1) * golden gamma. Pure
/// function of its arguments, so sample i can be drawn independently.
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index);

/// Deterministic test signal of length n.
///   Ramp     -> (k, 0)
///   Impulse  -> (1, 0) at index 0, zero elsewhere
///   Constant -> (1, 0)
///   Random   -> re, im uniform in [-1, 1], from splitmix64(seed, 2k) and
///               splitmix64(seed, 2k + 1)
/// The seed only affects Random. Throws InvalidLength when n == 0.
SignalBuffer generate(SignalKind kind, std::size_t n, std::uint64_t seed = 0);

}  // namespace stagefft
