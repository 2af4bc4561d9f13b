#include "stagefft/planner.hpp"

#include <string>

#include "stagefft/error.hpp"

namespace stagefft {
namespace {

void check_supported(std::size_t n) {
    if (!is_power_of_two(n)) {
        throw InvalidLength("length must be a power of two, got " + std::to_string(n));
    }
    if (n < kMinLength || n > kMaxLength) {
        throw UnsupportedLength("length " + std::to_string(n) + " outside supported range [" +
                                std::to_string(kMinLength) + ", " + std::to_string(kMaxLength) + "]");
    }
}

bool valid_radix(std::size_t r) { return r == 2 || r == 4 || r == 8; }

}  // namespace

StageList factorize_stages(std::size_t n) {
    check_supported(n);
    StageList stages;
    std::size_t remainder = n;
    while (remainder % 8 == 0 && remainder != 2 && remainder != 4) {
        stages.push_back(8);
        remainder /= 8;
    }
    if (remainder > 1) {
        stages.push_back(remainder);
    }
    return stages;
}

std::vector<std::size_t> digit_reversal_permutation(const StageList& stages) {
    if (stages.empty()) {
        throw InvalidPlan("stage list is empty");
    }
    // span[s] is the sub-transform length completed after stage s.
    std::vector<std::size_t> span(stages.size());
    std::size_t n = 1;
    for (std::size_t s = 0; s < stages.size(); ++s) {
        if (!valid_radix(stages[s])) {
            throw InvalidPlan("radix " + std::to_string(stages[s]) + " is not one of 2, 4, 8");
        }
        n *= stages[s];
        span[s] = n;
    }

    // Position p is read most-significant digit first (outermost stage);
    // the input index reverses that digit order.
    std::vector<std::size_t> perm(n);
    for (std::size_t p = 0; p < n; ++p) {
        std::size_t rest = p;
        std::size_t index = 0;
        std::size_t weight = 1;
        for (std::size_t s = stages.size(); s-- > 0;) {
            const std::size_t block = span[s] / stages[s];
            index += (rest / block) * weight;
            rest %= block;
            weight *= stages[s];
        }
        perm[p] = index;
    }
    return perm;
}

FftPlan::FftPlan(std::size_t length, Direction direction, Algorithm algorithm, StageList stages)
    : length_(length),
      direction_(direction),
      algorithm_(algorithm),
      stages_(std::move(stages)),
      permutation_(digit_reversal_permutation(stages_)),
      twiddles_(length),
      scale_(direction == Direction::Inverse ? 1.0f / static_cast<float>(length) : 1.0f),
      chunk_(length),
      scratch_(std::make_shared<ScratchPool>(length)) {}

FftPlan make_plan(std::size_t n, Direction direction, Algorithm algorithm) {
    return FftPlan(n, direction, algorithm, factorize_stages(n));
}

FftPlan make_plan(const StageList& stages, Direction direction) {
    if (stages.empty()) {
        throw InvalidPlan("stage list is empty");
    }
    std::size_t n = 1;
    for (std::size_t r : stages) {
        if (!valid_radix(r)) {
            throw InvalidPlan("radix " + std::to_string(r) + " is not one of 2, 4, 8");
        }
        n *= r;
    }
    check_supported(n);
    return FftPlan(n, direction, Algorithm::MixedRadix, stages);
}

}  // namespace stagefft
