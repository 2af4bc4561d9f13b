#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <random>
#include <string>

#include "stagefft/types.hpp"

namespace stagefft::testing {

// ||a - b||_2 / ||b||_2 in double precision; b is the reference.
inline double relative_l2(SignalView a, SignalView b) {
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        num += std::norm(std::complex<double>(a[i]) - std::complex<double>(b[i]));
        den += std::norm(std::complex<double>(b[i]));
    }
    return den == 0.0 ? std::sqrt(num) : std::sqrt(num / den);
}

inline double energy(SignalView a) {
    double e = 0.0;
    for (const ComplexSample& z : a) {
        e += std::norm(std::complex<double>(z));
    }
    return e;
}

// Independent of signalgen so generator bugs cannot hide kernel bugs.
inline SignalBuffer random_signal(std::size_t n, std::mt19937_64& rng) {
    std::uniform_real_distribution<float> dist(-1.0f, 1.0f);
    SignalBuffer s(n);
    for (ComplexSample& z : s) {
        z = {dist(rng), dist(rng)};
    }
    return s;
}

inline SignalBuffer ramp(std::size_t n) {
    SignalBuffer s(n);
    for (std::size_t i = 0; i < n; ++i) {
        s[i] = {static_cast<float>(i), 0.0f};
    }
    return s;
}

inline std::vector<std::size_t> supported_lengths() { return {8, 16, 32, 64, 128, 256, 512, 1024, 2048}; }

class TempDir {
public:
    TempDir() {
        std::random_device rd;
        path_ = std::filesystem::temp_directory_path() / ("stagefft-test-" + std::to_string(rd()));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

}  // namespace stagefft::testing
