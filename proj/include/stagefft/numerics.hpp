#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stagefft/types.hpp"

namespace stagefft {

/// Largest length a twiddle table may be built for.
inline constexpr std::size_t kMaxTwiddleLength = 4096;

/// Root of unity omega_n^k = exp(-2*pi*i*k/n), evaluated directly in double
/// precision and rounded once. `k` is reduced modulo `n`, so negative indices
/// are accepted. Throws InvalidLength when n == 0.
ComplexSample twiddle(std::size_t n, std::int64_t k);

/// Multiply by -i (forward quarter turn) or +i (inverse quarter turn).
constexpr ComplexSample rotate_neg_i(ComplexSample z) { return {z.imag(), -z.real()}; }
constexpr ComplexSample rotate_pos_i(ComplexSample z) { return {-z.imag(), z.real()}; }

/// Precomputed omega_n^k for k in [0, n). Built once per plan and never mutated.
class TwiddleTable {
public:
    /// Throws InvalidLength unless n is a power of two in [1, kMaxTwiddleLength].
    explicit TwiddleTable(std::size_t n);

    std::size_t size() const noexcept { return factors_.size(); }
    const ComplexSample& operator[](std::size_t k) const noexcept { return factors_[k]; }
    const std::vector<ComplexSample>& factors() const noexcept { return factors_; }

    // Conjugated lookup for the inverse direction.
    ComplexSample get(std::size_t k, Direction direction) const noexcept {
        const ComplexSample w = factors_[k];
        return direction == Direction::Forward ? w : std::conj(w);
    }

    friend bool operator==(const TwiddleTable&, const TwiddleTable&) = default;

private:
    std::vector<ComplexSample> factors_;
};

TwiddleTable build_twiddle_table(std::size_t n);

}  // namespace stagefft
