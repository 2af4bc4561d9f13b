#include "stagefft/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "stagefft/error.hpp"

namespace stagefft {
namespace {

constexpr double kGammaTolerance = 1e-12;
constexpr int kGammaMaxIterations = 500;

double project(ComplexSample z, BinOn basis) {
    switch (basis) {
        case BinOn::Real:
            return z.real();
        case BinOn::Imag:
            return z.imag();
        case BinOn::Magnitude:
            break;
    }
    return std::hypot(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

void fill(Histogram& h, SignalView values, BinOn basis) {
    const double lo = h.bin_edges.front();
    const double width = h.bin_edges.back() - lo;
    const std::size_t bins = h.bins();
    for (const ComplexSample& z : values) {
        const double t = (project(z, basis) - lo) / width;
        auto bin = static_cast<std::size_t>(std::max(0.0, std::floor(t * static_cast<double>(bins))));
        h.counts[std::min(bin, bins - 1)] += 1.0;
    }
}

// P(a, x) by its power series; valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int i = 1; i <= kGammaMaxIterations; ++i) {
        term *= x / (a + i);
        sum += term;
        if (std::abs(term) < std::abs(sum) * kGammaTolerance) {
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw ConvergenceError("incomplete gamma series did not converge for a=" + std::to_string(a) +
                           ", x=" + std::to_string(x));
}

// Q(a, x) by the Legendre continued fraction (modified Lentz); valid for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / std::numeric_limits<double>::epsilon();
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kGammaMaxIterations; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) {
            d = tiny;
        }
        c = b + an / c;
        if (std::abs(c) < tiny) {
            c = tiny;
        }
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kGammaTolerance) {
            return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
        }
    }
    throw ConvergenceError("incomplete gamma continued fraction did not converge for a=" + std::to_string(a) +
                           ", x=" + std::to_string(x));
}

}  // namespace

std::string_view to_string(BinOn basis) {
    switch (basis) {
        case BinOn::Magnitude:
            return "magnitude";
        case BinOn::Real:
            return "real";
        case BinOn::Imag:
            return "imag";
    }
    return "unknown";
}

std::optional<BinOn> parse_bin_on(std::string_view name) {
    for (BinOn basis : {BinOn::Magnitude, BinOn::Real, BinOn::Imag}) {
        if (name == to_string(basis)) {
            return basis;
        }
    }
    return std::nullopt;
}

HistogramPair build_histograms(SignalView a, SignalView b, std::size_t bins, BinOn basis) {
    if (a.size() != b.size()) {
        throw ShapeError("histogram inputs differ in length: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    }
    if (a.empty()) {
        throw ShapeError("histogram inputs are empty");
    }
    if (bins < 2) {
        throw InsufficientData("histograms need at least 2 bins");
    }

    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (SignalView values : {a, b}) {
        for (const ComplexSample& z : values) {
            const double v = project(z, basis);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }

    HistogramPair pair;
    Histogram edges_only;
    if (!(hi > lo)) {
        pair.degenerate = true;
        edges_only.bin_edges = {lo - 0.5, lo + 0.5};
        edges_only.counts.assign(1, 0.0);
    } else {
        edges_only.bin_edges.resize(bins + 1);
        for (std::size_t i = 0; i <= bins; ++i) {
            edges_only.bin_edges[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
        }
        edges_only.bin_edges.back() = hi;
        edges_only.counts.assign(bins, 0.0);
    }
    pair.first = edges_only;
    pair.second = edges_only;
    fill(pair.first, a, basis);
    fill(pair.second, b, basis);
    return pair;
}

Chi2Result chi2_reduced(const Histogram& s, const Histogram& n) {
    if (s.bin_edges != n.bin_edges || s.counts.size() != n.counts.size()) {
        throw ShapeError("chi-square histograms must share bin edges");
    }
    Chi2Result result;
    double sum = 0.0;
    for (std::size_t i = 0; i < n.counts.size(); ++i) {
        if (n.counts[i] > 0.0) {
            const double diff = s.counts[i] - n.counts[i];
            sum += diff * diff / n.counts[i];
            ++result.bins_used;
        } else {
            ++result.bins_skipped;
        }
    }
    if (result.bins_used < 2) {
        throw InsufficientData("chi-square needs at least 2 bins with positive reference count, got " +
                               std::to_string(result.bins_used));
    }
    result.ndf = static_cast<int>(result.bins_used) - 1;
    result.chi2_reduced = sum / result.ndf;
    return result;
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) {
        throw DomainError("regularized gamma requires a > 0 and x >= 0");
    }
    if (x == 0.0) {
        return 1.0;
    }
    if (x < a + 1.0) {
        return 1.0 - gamma_p_series(a, x);
    }
    return gamma_q_continued_fraction(a, x);
}

double chi2_p_value(double chi2_total, int ndf) {
    if (!(chi2_total >= 0.0)) {
        throw DomainError("chi-square statistic must be non-negative");
    }
    if (ndf < 1) {
        throw DomainError("chi-square needs at least one degree of freedom");
    }
    return regularized_gamma_q(0.5 * ndf, 0.5 * chi2_total);
}

RelativeDifference relative_difference(SignalView a, SignalView b) {
    if (a.size() != b.size()) {
        throw ShapeError("relative difference inputs differ in length: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
    }
    RelativeDifference result;
    result.ratios.reserve(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
        const std::complex<double> ak(a[k]);
        const std::complex<double> bk(b[k]);
        const double diff = std::abs(ak - bk);
        const double base = std::abs(ak);
        result.abs_diff_max = std::max(result.abs_diff_max, diff);
        double ratio = 0.0;
        if (base > 0.0) {
            ratio = diff / base;
            result.max_finite = std::max(result.max_finite, ratio);
        } else if (diff > 0.0) {
            ratio = std::numeric_limits<double>::infinity();
            ++result.infinite_count;
        }
        result.ratios.push_back(ratio);
    }
    return result;
}

ChiSquareReport compare_spectra(SignalView observed, SignalView reference, std::size_t bins, BinOn basis) {
    const HistogramPair hist = build_histograms(observed, reference, bins, basis);
    const RelativeDifference rel = relative_difference(observed, reference);

    ChiSquareReport report;
    report.max_rel_diff = rel.max_finite;
    report.abs_diff_max = rel.abs_diff_max;
    if (hist.degenerate) {
        report.degenerate_histogram = true;
        report.ndf = 1;
        report.bins_used = 1;
        return report;
    }

    const Chi2Result chi2 = chi2_reduced(hist.first, hist.second);
    report.chi2_reduced = chi2.chi2_reduced;
    report.ndf = chi2.ndf;
    report.p_value = chi2_p_value(chi2.chi2_reduced * chi2.ndf, chi2.ndf);
    report.bins_used = chi2.bins_used;
    report.bins_skipped = chi2.bins_skipped;
    return report;
}

}  // namespace stagefft
