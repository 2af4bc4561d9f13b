#include "stagefft/kernels.hpp"

#include <array>
#include <bit>
#include <string>

#include "stagefft/error.hpp"

namespace stagefft {
namespace {

// Plain complex product; avoids the Annex G NaN recovery path of operator*.
inline ComplexSample cmul(ComplexSample a, ComplexSample b) {
    return {a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real()};
}

template <Direction D>
inline ComplexSample quarter_turn(ComplexSample z) {
    if constexpr (D == Direction::Forward) {
        return rotate_neg_i(z);
    } else {
        return rotate_pos_i(z);
    }
}

template <Direction D>
inline ComplexSample table_twiddle(const TwiddleTable& table, std::size_t index) {
    if constexpr (D == Direction::Forward) {
        return table[index];
    } else {
        return std::conj(table[index]);
    }
}

inline constexpr float kHalfSqrt2 = 0.707106781186547524400844362104849039f;

template <Direction D>
struct Dft2 {
    static void run(std::array<ComplexSample, 2>& a) {
        const ComplexSample x0 = a[0];
        a[0] = x0 + a[1];
        a[1] = x0 - a[1];
    }
};

template <Direction D>
inline void dft4(ComplexSample& a0, ComplexSample& a1, ComplexSample& a2, ComplexSample& a3) {
    const ComplexSample s0 = a0 + a2;
    const ComplexSample d0 = a0 - a2;
    const ComplexSample s1 = a1 + a3;
    const ComplexSample d1 = quarter_turn<D>(a1 - a3);
    a0 = s0 + s1;
    a1 = d0 + d1;
    a2 = s0 - s1;
    a3 = d0 - d1;
}

template <Direction D>
struct Dft4 {
    static void run(std::array<ComplexSample, 4>& a) { dft4<D>(a[0], a[1], a[2], a[3]); }
};

template <Direction D>
struct Dft8 {
    static void run(std::array<ComplexSample, 8>& a) {
        constexpr float sign = D == Direction::Forward ? -1.0f : 1.0f;
        constexpr ComplexSample w1{kHalfSqrt2, sign * kHalfSqrt2};
        constexpr ComplexSample w3{-kHalfSqrt2, sign * kHalfSqrt2};

        ComplexSample e0 = a[0], e1 = a[2], e2 = a[4], e3 = a[6];
        ComplexSample o0 = a[1], o1 = a[3], o2 = a[5], o3 = a[7];
        dft4<D>(e0, e1, e2, e3);
        dft4<D>(o0, o1, o2, o3);
        o1 = cmul(o1, w1);
        o2 = quarter_turn<D>(o2);
        o3 = cmul(o3, w3);

        a[0] = e0 + o0;
        a[4] = e0 - o0;
        a[1] = e1 + o1;
        a[5] = e1 - o1;
        a[2] = e2 + o2;
        a[6] = e2 - o2;
        a[3] = e3 + o3;
        a[7] = e3 - o3;
    }
};

void check_stage(std::size_t radix, const StageBuffer& buf, const TwiddleTable& twiddles) {
    const std::size_t n = buf.in.size();
    const std::size_t span = radix * buf.stride;
    if (buf.out.size() != n || buf.stride == 0 || n == 0 || n % span != 0 || twiddles.size() % span != 0) {
        throw InvalidPlan("radix-" + std::to_string(radix) + " stage: stride " + std::to_string(buf.stride) +
                          " misaligned with buffer length " + std::to_string(n) + " and twiddle length " +
                          std::to_string(twiddles.size()));
    }
}

template <std::size_t R, Direction D, template <Direction> class Kernel>
void run_stage(const StageBuffer& buf, const TwiddleTable& twiddles) {
    const std::size_t n = buf.in.size();
    const std::size_t stride = buf.stride;
    const std::size_t span = R * stride;
    const std::size_t step = twiddles.size() / span;

    std::array<ComplexSample, R> a;
    for (std::size_t base = 0; base < n; base += span) {
        for (std::size_t k = 0; k < stride; ++k) {
            a[0] = buf.in[base + k];
            for (std::size_t j = 1; j < R; ++j) {
                a[j] = cmul(buf.in[base + j * stride + k], table_twiddle<D>(twiddles, j * k * step));
            }
            Kernel<D>::run(a);
            for (std::size_t q = 0; q < R; ++q) {
                buf.out[base + q * stride + k] = a[q];
            }
        }
    }
}

template <std::size_t R, template <Direction> class Kernel>
void stage(const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction) {
    check_stage(R, buf, twiddles);
    if (direction == Direction::Forward) {
        run_stage<R, Direction::Forward, Kernel>(buf, twiddles);
    } else {
        run_stage<R, Direction::Inverse, Kernel>(buf, twiddles);
    }
}

template <Direction D>
struct SplitRadix {
    const TwiddleTable& table;
    const TwiddleProbe& probe;

    // Writes the DFT of in[0], in[stride], ... (n points) into out[0..n).
    void run(const ComplexSample* in, std::size_t stride, ComplexSample* out, std::size_t n) const {
        if (n == 1) {
            out[0] = in[0];
            return;
        }
        if (n == 2) {
            out[0] = in[0] + in[stride];
            out[1] = in[0] - in[stride];
            return;
        }

        const std::size_t half = n / 2;
        const std::size_t quarter = n / 4;
        run(in, 2 * stride, out, half);
        run(in + stride, 4 * stride, out + half, quarter);
        run(in + 3 * stride, 4 * stride, out + half + quarter, quarter);

        const std::size_t step = table.size() / n;
        for (std::size_t k = 0; k < quarter; ++k) {
            const ComplexSample w1 = table_twiddle<D>(table, k * step);
            const ComplexSample w3 = table_twiddle<D>(table, 3 * k * step);
            if (probe) {
                probe(TwiddleUse{n, k, w1, w3});
            }
            const ComplexSample odd1 = cmul(w1, out[half + k]);
            const ComplexSample odd3 = cmul(w3, out[half + quarter + k]);
            const ComplexSample sum = odd1 + odd3;
            const ComplexSample diff = quarter_turn<D>(odd1 - odd3);
            const ComplexSample even0 = out[k];
            const ComplexSample even1 = out[k + quarter];
            out[k] = even0 + sum;
            out[k + half] = even0 - sum;
            out[k + quarter] = even1 + diff;
            out[k + half + quarter] = even1 - diff;
        }
    }
};

}  // namespace

void radix2_stage(const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction) {
    stage<2, Dft2>(buf, twiddles, direction);
}

void radix4_stage(const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction) {
    stage<4, Dft4>(buf, twiddles, direction);
}

void radix8_stage(const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction) {
    stage<8, Dft8>(buf, twiddles, direction);
}

void apply_stage(std::size_t radix, const StageBuffer& buf, const TwiddleTable& twiddles, Direction direction) {
    switch (radix) {
        case 2:
            radix2_stage(buf, twiddles, direction);
            return;
        case 4:
            radix4_stage(buf, twiddles, direction);
            return;
        case 8:
            radix8_stage(buf, twiddles, direction);
            return;
        default:
            throw InvalidPlan("radix " + std::to_string(radix) + " is not one of 2, 4, 8");
    }
}

void split_radix_unscaled(SignalView input, std::span<ComplexSample> output, const TwiddleTable& twiddles,
                          Direction direction, const TwiddleProbe& probe) {
    const std::size_t n = input.size();
    if (!is_power_of_two(n)) {
        throw InvalidLength("split-radix length must be a power of two, got " + std::to_string(n));
    }
    if (output.size() != n || twiddles.size() % n != 0) {
        throw InvalidPlan("split-radix: output or twiddle table does not match length " + std::to_string(n));
    }
    if (direction == Direction::Forward) {
        SplitRadix<Direction::Forward>{twiddles, probe}.run(input.data(), 1, output.data(), n);
    } else {
        SplitRadix<Direction::Inverse>{twiddles, probe}.run(input.data(), 1, output.data(), n);
    }
}

SignalBuffer split_radix_transform(SignalView input, const TwiddleTable& twiddles, Direction direction,
                                   const TwiddleProbe& probe) {
    SignalBuffer output(input.size());
    split_radix_unscaled(input, output, twiddles, direction, probe);
    if (direction == Direction::Inverse) {
        const float scale = 1.0f / static_cast<float>(input.size());
        for (ComplexSample& z : output) {
            z *= scale;
        }
    }
    return output;
}

std::uint64_t count_butterflies(const StageList& stages) {
    std::uint64_t n = 1;
    for (std::size_t r : stages) {
        n *= r;
    }
    std::uint64_t total = 0;
    for (std::size_t r : stages) {
        const auto log2r = static_cast<std::uint64_t>(std::countr_zero(r));
        total += (n / r) * (r / 2) * log2r;
    }
    return total;
}

std::uint64_t count_split_radix_butterflies(std::size_t n) {
    if (n <= 1) {
        return 0;
    }
    if (n == 2) {
        return 1;
    }
    // Each of the n/4 L-butterflies is three two-input butterflies.
    return 3 * (n / 4) + count_split_radix_butterflies(n / 2) + 2 * count_split_radix_butterflies(n / 4);
}

std::uint64_t count_butterflies(const FftPlan& plan) {
    if (plan.algorithm() == Algorithm::SplitRadix) {
        return count_split_radix_butterflies(plan.length());
    }
    return count_butterflies(plan.stages());
}

}  // namespace stagefft
