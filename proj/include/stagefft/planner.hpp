#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "stagefft/numerics.hpp"
#include "stagefft/scratch_pool.hpp"
#include "stagefft/types.hpp"

namespace stagefft {

inline constexpr std::size_t kMinLength = 8;
inline constexpr std::size_t kMaxLength = 2048;

/// Radix sequence, innermost (first executed) stage first.
using StageList = std::vector<std::size_t>;

/// Greedy largest-radix-first factorization of n into radices 8, 4 and 2.
/// Throws InvalidLength for non-powers of two and UnsupportedLength outside
/// [kMinLength, kMaxLength].
StageList factorize_stages(std::size_t n);

/// Input reordering for the iterative DIT pipeline described by `stages`:
/// the pipeline reads input[perm[p]] into position p. For all-radix-2 stages
/// this is binary bit reversal. Throws InvalidPlan on an empty list or a
/// radix outside {2, 4, 8}.
std::vector<std::size_t> digit_reversal_permutation(const StageList& stages);

/// Immutable execution recipe. Construct through make_plan. Copies share the
/// scratch pool, which is not part of the plan's value.
class FftPlan {
public:
    std::size_t length() const noexcept { return length_; }
    Direction direction() const noexcept { return direction_; }
    Algorithm algorithm() const noexcept { return algorithm_; }
    const StageList& stages() const noexcept { return stages_; }
    const std::vector<std::size_t>& permutation() const noexcept { return permutation_; }
    const TwiddleTable& twiddles() const noexcept { return twiddles_; }
    float scale() const noexcept { return scale_; }
    // Work-partition hint for batched execution; currently always the full length.
    std::size_t chunk() const noexcept { return chunk_; }

    ScratchPool& scratch() const noexcept { return *scratch_; }

    friend bool operator==(const FftPlan& a, const FftPlan& b) {
        return a.length_ == b.length_ && a.direction_ == b.direction_ && a.algorithm_ == b.algorithm_ &&
               a.stages_ == b.stages_ && a.permutation_ == b.permutation_ && a.twiddles_ == b.twiddles_ &&
               a.scale_ == b.scale_ && a.chunk_ == b.chunk_;
    }

private:
    FftPlan(std::size_t length, Direction direction, Algorithm algorithm, StageList stages);

    friend FftPlan make_plan(std::size_t, Direction, Algorithm);
    friend FftPlan make_plan(const StageList&, Direction);

    std::size_t length_;
    Direction direction_;
    Algorithm algorithm_;
    StageList stages_;
    std::vector<std::size_t> permutation_;
    TwiddleTable twiddles_;
    float scale_;
    std::size_t chunk_;
    std::shared_ptr<ScratchPool> scratch_;
};

/// Plan with the greedy factorization. Scale is 1 for forward, 1/N for inverse.
FftPlan make_plan(std::size_t n, Direction direction, Algorithm algorithm = Algorithm::MixedRadix);

/// Mixed-radix plan with a caller-chosen stage order. The product of the
/// stages must be a supported length.
FftPlan make_plan(const StageList& stages, Direction direction);

}  // namespace stagefft
