#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "stagefft/types.hpp"

namespace stagefft {

struct Histogram {
    std::vector<double> bin_edges;  // strictly increasing, size B + 1
    std::vector<double> counts;     // size B

    std::size_t bins() const noexcept { return counts.size(); }
    friend bool operator==(const Histogram&, const Histogram&) = default;
};

// Which scalar of each complex sample gets binned.
enum class BinOn { Magnitude, Real, Imag };

std::string_view to_string(BinOn basis);
std::optional<BinOn> parse_bin_on(std::string_view name);

struct HistogramPair {
    Histogram first;
    Histogram second;
    // Set when every value was identical and a single unit-width bin was used.
    bool degenerate = false;
};

/// Bins a and b on shared equal-width edges spanning the union of their
/// values; the last bin is closed on the right. Throws ShapeError on a length
/// mismatch or empty input, and InsufficientData when bins < 2.
HistogramPair build_histograms(SignalView a, SignalView b, std::size_t bins, BinOn basis = BinOn::Magnitude);

struct Chi2Result {
    double chi2_reduced = 0.0;
    int ndf = 0;
    std::size_t bins_used = 0;
    std::size_t bins_skipped = 0;
};

/// Reduced chi-square of observed histogram `s` against reference `n`:
///   sum_i (s_i - n_i)^2 / n_i / ndf,  ndf = (bins with n_i > 0) - 1.
/// Bins whose reference count is zero are skipped. Throws ShapeError when the
/// edges differ and InsufficientData when fewer than two bins are usable.
Chi2Result chi2_reduced(const Histogram& s, const Histogram& n);

/// Regularized upper incomplete gamma Q(a, x). Series for x < a + 1,
/// modified Lentz continued fraction otherwise; tolerance 1e-12, at most 500
/// iterations. Throws DomainError for a <= 0 or x < 0 and ConvergenceError if
/// the iteration cap is hit.
double regularized_gamma_q(double a, double x);

/// Probability that a chi-square variate with `ndf` degrees of freedom is
/// >= chi2_total, i.e. Q(ndf/2, chi2_total/2). Note the argument is the total
/// statistic (reduced * ndf). Throws DomainError for negative input or
/// ndf < 1.
double chi2_p_value(double chi2_total, int ndf);

struct RelativeDifference {
    // |a_k - b_k| / |a_k|; +inf where |a_k| == 0 but |b_k| != 0.
    std::vector<double> ratios;
    std::size_t infinite_count = 0;
    double max_finite = 0.0;
    // max_k |a_k - b_k|, reported alongside the ratio.
    double abs_diff_max = 0.0;
};

/// Elementwise relative difference of b from a on complex magnitudes.
/// Throws ShapeError on a length mismatch.
RelativeDifference relative_difference(SignalView a, SignalView b);

struct ChiSquareReport {
    double chi2_reduced = 0.0;
    int ndf = 0;
    double p_value = 1.0;
    std::size_t bins_used = 0;
    std::size_t bins_skipped = 0;
    double max_rel_diff = 0.0;
    double abs_diff_max = 0.0;
    // All compared values were identical; chi-square is reported as 0 with a
    // nominal single degree of freedom.
    bool degenerate_histogram = false;
};

/// Full comparison of an observed spectrum against a reference one: shared
/// histograms, reduced chi-square, p-value and relative differences.
ChiSquareReport compare_spectra(SignalView observed, SignalView reference, std::size_t bins,
                                BinOn basis = BinOn::Magnitude);

}  // namespace stagefft
