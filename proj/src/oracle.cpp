#include "stagefft/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "stagefft/error.hpp"

namespace stagefft {

SignalBuffer naive_dft(SignalView input, Direction direction) {
    const std::size_t n = input.size();
    if (n == 0) {
        throw InvalidLength("naive_dft: input must not be empty");
    }

    // Roots indexed by (k*j) mod n keep every angle in [0, 2*pi).
    const double sign = direction == Direction::Forward ? -1.0 : 1.0;
    std::vector<std::complex<double>> roots(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        roots[j] = {std::cos(angle), sign * std::sin(angle)};
    }

    const double scale = direction == Direction::Forward ? 1.0 : 1.0 / static_cast<double>(n);
    SignalBuffer output(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> acc{0.0, 0.0};
        std::size_t index = 0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += std::complex<double>(input[j]) * roots[index];
            index += k;
            if (index >= n) {
                index -= n;
            }
        }
        acc *= scale;
        output[k] = {static_cast<float>(acc.real()), static_cast<float>(acc.imag())};
    }
    return output;
}

}  // namespace stagefft
