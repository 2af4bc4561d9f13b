#pragma once

#include "stagefft/types.hpp"

namespace stagefft {

/// Direct O(N^2) summation of the DFT (forward) or the 1/N-normalized inverse
/// DFT. Accepts any positive length. Accumulates in double precision and
/// rounds once per output, so it is strictly more accurate than the engine.
/// Throws InvalidLength on empty input.
SignalBuffer naive_dft(SignalView input, Direction direction);

}  // namespace stagefft
