// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Tolerances are fixed here and must not be loosened.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <json.hpp>

#include "cli.hpp"
#include "stagefft/bench.hpp"
#include "stagefft/executor.hpp"
#include "stagefft/kernels.hpp"
#include "stagefft/numerics.hpp"
#include "stagefft/oracle.hpp"
#include "stagefft/planner.hpp"
#include "stagefft/signal_io.hpp"
#include "stagefft/stats.hpp"
#include "test_support.hpp"

namespace {

using namespace stagefft;
using testing::relative_l2;

constexpr double kOracleTol = 1e-4;
constexpr double kOracleBudgetSeconds = 30.0;
constexpr double kChi2ReducedMax = 0.01;
constexpr double kPValueMin = 0.999;
constexpr double kRelDiffMax = 1e-4;
constexpr double kRoundTripTol = 1e-4;
constexpr double kPropertyTol = 1e-4;
constexpr double kTwiddleTol = 1e-6;
constexpr std::size_t kBenchIterations = 1000;
constexpr double kExactExpTol = 1e-10;
constexpr double kComplementTol = 1e-10;
constexpr double kQuadratureTol = 1e-8;
constexpr double kCrossPlanTol = 1e-4;
constexpr int kInstances = 100;

constexpr Algorithm kAlgorithms[] = {Algorithm::MixedRadix, Algorithm::SplitRadix};

struct Verdict {
    bool pass;
    std::string detail;
};

std::string fmt(const char* format, double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, format, value);
    return buf;
}

Verdict oracle_sweep() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (std::size_t n : testing::supported_lengths()) {
        const SignalBuffer x = testing::ramp(n);
        const SignalBuffer reference = naive_dft(x, Direction::Forward);
        for (Algorithm algorithm : kAlgorithms) {
            worst = std::max(worst, relative_l2(execute(make_plan(n, Direction::Forward, algorithm), x), reference));
        }
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst <= kOracleTol && seconds < kOracleBudgetSeconds,
            "worst rel L2 " + fmt("%.3e", worst) + " (tol 1e-4), " + fmt("%.2f", seconds) + " s (budget 30 s)"};
}

Verdict precision_replication() {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(
        {"verify", "--length", "2048", "--signal", "ramp", "--lhs", "mixed", "--rhs", "oracle", "--bins", "2048"}, out,
        err);
    if (code != 0) {
        return {false, "verify exited " + std::to_string(code) + ": " + err.str()};
    }
    const nlohmann::json report = nlohmann::json::parse(out.str());
    const double chi2 = report.at("chi2_reduced").get<double>();
    const double p = report.at("p_value").get<double>();
    return {chi2 <= kChi2ReducedMax && p >= kPValueMin,
            "chi2_reduced " + fmt("%.3e", chi2) + " (max 0.01), p_value " + fmt("%.6f", p) + " (min 0.999)"};
}

Verdict relative_difference_bound() {
    const SignalBuffer x = testing::ramp(2048);
    const SignalBuffer engine = execute(make_plan(2048, Direction::Forward), x);
    const RelativeDifference rel = relative_difference(engine, naive_dft(x, Direction::Forward));
    return {rel.max_finite <= kRelDiffMax, "max |e-o|/|e| " + fmt("%.3e", rel.max_finite) + " (tol 1e-4), " +
                                               std::to_string(rel.infinite_count) + " zero-magnitude flagged"};
}

Verdict round_trip() {
    std::mt19937_64 rng(1001);
    double worst = 0.0;
    for (std::size_t n : testing::supported_lengths()) {
        for (Algorithm algorithm : kAlgorithms) {
            const FftPlan forward = make_plan(n, Direction::Forward, algorithm);
            const FftPlan inverse = make_plan(n, Direction::Inverse, algorithm);
            for (int i = 0; i < kInstances; ++i) {
                const SignalBuffer x = testing::random_signal(n, rng);
                worst = std::max(worst, relative_l2(execute(inverse, execute(forward, x)), x));
            }
        }
    }
    return {worst <= kRoundTripTol, "worst rel L2 " + fmt("%.3e", worst) + " (tol 1e-4)"};
}

Verdict parseval_and_linearity() {
    std::mt19937_64 rng(1002);
    std::uniform_real_distribution<float> scalar(-2.0f, 2.0f);
    double worst_parseval = 0.0;
    double worst_linear = 0.0;
    for (std::size_t n : {8, 64, 512, 2048}) {
        for (Algorithm algorithm : kAlgorithms) {
            const FftPlan forward = make_plan(n, Direction::Forward, algorithm);
            for (int i = 0; i < kInstances; ++i) {
                const SignalBuffer x = testing::random_signal(n, rng);
                const SignalBuffer y = testing::random_signal(n, rng);
                const SignalBuffer fx = execute(forward, x);
                const SignalBuffer fy = execute(forward, y);
                const double ratio = testing::energy(fx) / static_cast<double>(n) / testing::energy(x);
                worst_parseval = std::max(worst_parseval, std::abs(ratio - 1.0));

                const ComplexSample a{scalar(rng), scalar(rng)};
                const ComplexSample b{scalar(rng), scalar(rng)};
                SignalBuffer combo(n);
                SignalBuffer expected(n);
                for (std::size_t j = 0; j < n; ++j) {
                    combo[j] = a * x[j] + b * y[j];
                    expected[j] = a * fx[j] + b * fy[j];
                }
                worst_linear = std::max(worst_linear, relative_l2(execute(forward, combo), expected));
            }
        }
    }
    return {worst_parseval <= kPropertyTol && worst_linear <= kPropertyTol,
            "Parseval worst " + fmt("%.3e", worst_parseval) + ", linearity worst " + fmt("%.3e", worst_linear) +
                " (tol 1e-4)"};
}

Verdict twiddle_identities() {
    double worst = 0.0;
    for (std::size_t n = 8; n <= 2048; n *= 2) {
        const auto quarter = static_cast<std::int64_t>(n / 4);
        for (std::int64_t k = 0; k < quarter; ++k) {
            const ComplexSample w = twiddle(n, k);
            const ComplexSample w3 = twiddle(n, 3 * k);
            const ComplexSample lhs1 = twiddle(n, k + quarter);
            const ComplexSample lhs3 = twiddle(n, 3 * (k + quarter));
            // -i * w and +i * w3, componentwise.
            const float errs[] = {std::abs(lhs1.real() - w.imag()), std::abs(lhs1.imag() + w.real()),
                                  std::abs(lhs3.real() + w3.imag()), std::abs(lhs3.imag() - w3.real())};
            worst = std::max(worst, static_cast<double>(*std::max_element(std::begin(errs), std::end(errs))));
        }
    }
    return {worst <= kTwiddleTol, "worst componentwise error " + fmt("%.3e", worst) + " (tol 1e-6)"};
}

Verdict butterfly_counts() {
    for (std::size_t n : testing::supported_lengths()) {
        const auto log2n = static_cast<std::size_t>(std::countr_zero(n));
        const FftPlan plan = make_plan(StageList(log2n, 2), Direction::Forward);
        const std::uint64_t expected = (n / 2) * log2n;
        if (count_butterflies(plan) != expected) {
            return {false, "N=" + std::to_string(n) + " reported " + std::to_string(count_butterflies(plan)) +
                               ", expected " + std::to_string(expected)};
        }
    }
    return {true, "radix-2 plans report (N/2)log2 N for N = 8..2048"};
}

Verdict benchmark_protocol() {
    testing::TempDir dir;
    const auto records_path = dir / "records.csv";
    const auto summary_path = dir / "summary.json";
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run({"bench", "--lengths", "8:2048:pow2", "--iterations", std::to_string(kBenchIterations),
                               "--warmup", "1", "--records", records_path.string(), "--summary",
                               summary_path.string()},
                              out, err);
    if (code != 0) {
        return {false, "bench exited " + std::to_string(code) + ": " + err.str()};
    }
    std::map<std::size_t, std::size_t> timed;
    for (const BenchmarkRecord& r : import_records(records_path, RecordFormat::Csv)) {
        if (!r.warmup) {
            ++timed[r.length];
        }
    }
    for (std::size_t n : testing::supported_lengths()) {
        if (timed[n] != kBenchIterations) {
            return {false, "N=" + std::to_string(n) + " has " + std::to_string(timed[n]) + " non-warmup records"};
        }
    }
    const nlohmann::json summary = nlohmann::json::parse(read_text_file(summary_path));
    std::size_t lengths = 0;
    for (const auto& s : summary.at("summaries")) {
        ++lengths;
        if (!(s.at("optimal_us").get<double>() <= s.at("mean_us").get<double>())) {
            return {false, "optimal_us > mean_us at N=" + std::to_string(s.at("length").get<std::size_t>())};
        }
    }
    return {lengths == 9, std::to_string(lengths) + " lengths x 1000 timed records, optimal <= mean everywhere"};
}

double quadrature_cdf(double x, int k) {
    const double half_k = 0.5 * k;
    const double log_norm = half_k * std::log(2.0) + std::lgamma(half_k);
    auto integrand = [&](double u) {
        if (u == 0.0) {
            return k == 1 ? 2.0 * std::exp(-log_norm) : 0.0;
        }
        return 2.0 * std::exp((k - 1) * std::log(u) - 0.5 * u * u - log_norm);
    };
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, std::sqrt(x), 15, 1e-13);
}

Verdict chi2_machinery() {
    bool zero_ok = true;
    for (int k = 1; k <= 200; ++k) {
        zero_ok = zero_ok && chi2_p_value(0.0, k) == 1.0;
    }
    const double exp_err = std::abs(chi2_p_value(2.0, 2) - std::exp(-1.0));

    std::mt19937_64 rng(1009);
    std::uniform_real_distribution<double> stat(0.0, 400.0);
    std::uniform_int_distribution<int> dof(1, 300);
    double complement_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double x = stat(rng);
        const int k = dof(rng);
        complement_err = std::max(complement_err,
                                  std::abs(chi2_p_value(x, k) + boost::math::gamma_p(0.5 * k, 0.5 * x) - 1.0));
    }

    const std::pair<double, int> points[20] = {{10, 5},   {0.5, 1},  {1, 1},    {3.84, 1},   {2, 3},
                                               {7.5, 3},  {1, 5},    {20, 10},  {5, 10},     {50, 30},
                                               {25, 30},  {0.1, 2},  {100, 80}, {60, 80},    {200, 150},
                                               {150, 150}, {12, 4},  {0.01, 1}, {30, 20},    {400, 300}};
    double quad_err = 0.0;
    for (const auto& [x, k] : points) {
        quad_err = std::max(quad_err, std::abs(chi2_p_value(x, k) - (1.0 - quadrature_cdf(x, k))));
    }
    return {zero_ok && exp_err <= kExactExpTol && complement_err <= kComplementTol && quad_err <= kQuadratureTol,
            std::string("Q(0)=1 ") + (zero_ok ? "exact" : "violated") + ", |Q(2,2)-1/e| " + fmt("%.1e", exp_err) +
                ", complement " + fmt("%.1e", complement_err) + ", quadrature " + fmt("%.1e", quad_err)};
}

Verdict cross_plan() {
    std::mt19937_64 rng(1010);
    const FftPlan plans[] = {
        make_plan(StageList{8, 2}, Direction::Forward),
        make_plan(StageList{4, 4}, Direction::Forward),
        make_plan(StageList{2, 2, 2, 2}, Direction::Forward),
        make_plan(16, Direction::Forward, Algorithm::SplitRadix),
    };
    double worst = 0.0;
    for (int i = 0; i < kInstances; ++i) {
        const SignalBuffer x = testing::random_signal(16, rng);
        SignalBuffer outputs[4];
        for (int p = 0; p < 4; ++p) {
            outputs[p] = execute(plans[p], x);
        }
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                worst = std::max(worst, relative_l2(outputs[p], outputs[q]));
            }
        }
    }
    return {worst <= kCrossPlanTol, "worst pairwise rel L2 " + fmt("%.3e", worst) + " (tol 1e-4)"};
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Verdict()>> criteria[] = {
        {"oracle equivalence sweep", oracle_sweep},
        {"chi-square precision at N=2048", precision_replication},
        {"relative difference bound", relative_difference_bound},
        {"round-trip identity", round_trip},
        {"Parseval and linearity", parseval_and_linearity},
        {"twiddle quarter-period identities", twiddle_identities},
        {"radix-2 butterfly count", butterfly_counts},
        {"benchmark protocol", benchmark_protocol},
        {"chi-square machinery", chi2_machinery},
        {"cross-plan equivalence at N=16", cross_plan},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, check] : criteria) {
        ++index;
        Verdict v;
        try {
            v = check();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        std::printf("[%s] %2d %s: %s\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str());
        std::fflush(stdout);
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d/%d criteria passed\n", index - failures, index);
    return failures == 0 ? 0 : 1;
}
