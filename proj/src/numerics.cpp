#include "stagefft/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "stagefft/error.hpp"

namespace stagefft {

std::string_view to_string(Direction direction) {
    return direction == Direction::Forward ? "forward" : "inverse";
}

std::string_view to_string(Algorithm algorithm) {
    return algorithm == Algorithm::MixedRadix ? "mixed" : "split";
}

bool all_finite(SignalView samples) {
    for (const ComplexSample& z : samples) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            return false;
        }
    }
    return true;
}

ComplexSample twiddle(std::size_t n, std::int64_t k) {
    if (n == 0) {
        throw InvalidLength("twiddle: length must be positive");
    }
    const auto period = static_cast<std::int64_t>(n);
    std::int64_t r = k % period;
    if (r < 0) {
        r += period;
    }
    // Evaluate the upper half as the conjugate of the lower half so that
    // omega^(-k) == conj(omega^k) holds bit for bit.
    const bool upper = 2 * r > period;
    const std::int64_t index = upper ? period - r : r;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(index) / static_cast<double>(n);
    const auto re = static_cast<float>(std::cos(angle));
    const auto im = static_cast<float>(-std::sin(angle));
    return upper ? ComplexSample{re, -im} : ComplexSample{re, im};
}

TwiddleTable::TwiddleTable(std::size_t n) {
    if (!is_power_of_two(n) || n > kMaxTwiddleLength) {
        throw InvalidLength("twiddle table length must be a power of two in [1, " +
                            std::to_string(kMaxTwiddleLength) + "], got " + std::to_string(n));
    }
    factors_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        factors_.push_back(twiddle(n, static_cast<std::int64_t>(k)));
    }
}

TwiddleTable build_twiddle_table(std::size_t n) { return TwiddleTable(n); }

}  // namespace stagefft
