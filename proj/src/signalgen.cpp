#include "stagefft/signalgen.hpp"

#include "stagefft/error.hpp"

namespace stagefft {
namespace {

// 24 high bits give every float in the grid exactly; maps to [-1, 1].
float unit_interval(std::uint64_t bits) {
    const auto mantissa = static_cast<float>(bits >> 40);
    return mantissa / static_cast<float>(1u << 23) - 1.0f;
}

}  // namespace

std::string_view to_string(SignalKind kind) {
    switch (kind) {
        case SignalKind::Ramp:
            return "ramp";
        case SignalKind::Impulse:
            return "impulse";
        case SignalKind::Constant:
            return "constant";
        case SignalKind::Random:
            return "random";
    }
    return "unknown";
}

std::optional<SignalKind> parse_signal_kind(std::string_view name) {
    for (SignalKind kind : {SignalKind::Ramp, SignalKind::Impulse, SignalKind::Constant, SignalKind::Random}) {
        if (name == to_string(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

SignalBuffer generate(SignalKind kind, std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw InvalidLength("signal length must be positive");
    }
    SignalBuffer signal(n);
    switch (kind) {
        case SignalKind::Ramp:
            for (std::size_t k = 0; k < n; ++k) {
                signal[k] = {static_cast<float>(k), 0.0f};
            }
            break;
        case SignalKind::Impulse:
            signal[0] = {1.0f, 0.0f};
            break;
        case SignalKind::Constant:
            for (ComplexSample& z : signal) {
                z = {1.0f, 0.0f};
            }
            break;
        case SignalKind::Random:
            for (std::size_t k = 0; k < n; ++k) {
                signal[k] = {unit_interval(splitmix64(seed, 2 * k)), unit_interval(splitmix64(seed, 2 * k + 1))};
            }
            break;
    }
    return signal;
}

}  // namespace stagefft
