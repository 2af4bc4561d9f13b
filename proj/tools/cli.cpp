#include "cli.hpp"

#include <charconv>
#include <cstdio>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stagefft/bench.hpp"
#include "stagefft/error.hpp"
#include "stagefft/executor.hpp"
#include "stagefft/kernels.hpp"
#include "stagefft/oracle.hpp"
#include "stagefft/planner.hpp"
#include "stagefft/signal_io.hpp"
#include "stagefft/signalgen.hpp"
#include "stagefft/stats.hpp"

namespace stagefft::cli {
namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

const std::map<std::string, Direction> kDirections{{"forward", Direction::Forward},
                                                   {"inverse", Direction::Inverse}};
const std::map<std::string, Algorithm> kAlgorithms{{"mixed", Algorithm::MixedRadix},
                                                   {"split", Algorithm::SplitRadix}};

SignalKind signal_kind(const std::string& name) {
    const auto kind = parse_signal_kind(name);
    if (!kind) {
        throw UsageError("unknown signal '" + name + "' (ramp, impulse, constant, random)");
    }
    return *kind;
}

std::string join(const StageList& stages) {
    std::string s;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        s += (i ? "," : "") + std::to_string(stages[i]);
    }
    return s;
}

std::size_t parse_size(std::string_view token) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw UsageError("invalid length '" + std::string(token) + "'");
    }
    return value;
}

// "lo:hi:pow2" (powers of two from lo to hi) or a comma-separated list.
std::vector<std::size_t> parse_lengths(const std::string& text) {
    std::vector<std::size_t> lengths;
    const auto first = text.find(':');
    if (first != std::string::npos) {
        const auto second = text.find(':', first + 1);
        if (second == std::string::npos || text.substr(second + 1) != "pow2") {
            throw UsageError("length range must look like LO:HI:pow2, got '" + text + "'");
        }
        const std::size_t lo = parse_size(std::string_view(text).substr(0, first));
        const std::size_t hi = parse_size(std::string_view(text).substr(first + 1, second - first - 1));
        if (!is_power_of_two(lo) || lo > hi) {
            throw UsageError("length range bounds must be a power of two LO <= HI, got '" + text + "'");
        }
        for (std::size_t n = lo; n <= hi; n *= 2) {
            lengths.push_back(n);
        }
        return lengths;
    }
    std::string_view rest = text;
    while (!rest.empty()) {
        const auto comma = rest.find(',');
        lengths.push_back(parse_size(rest.substr(0, comma)));
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (lengths.empty()) {
        throw UsageError("no lengths given");
    }
    return lengths;
}

SignalBuffer transform_with(const std::string& algorithm, std::size_t length, Direction direction,
                            SignalView input) {
    if (algorithm == "oracle") {
        return naive_dft(input, direction);
    }
    return execute(make_plan(length, direction, kAlgorithms.at(algorithm)), input);
}

// Resolves a verify operand: an algorithm name or file:PATH.
SignalBuffer spectrum_for(const std::string& source, std::size_t length, Direction direction, SignalView input) {
    constexpr std::string_view file_prefix = "file:";
    if (source.rfind(file_prefix, 0) == 0) {
        SignalBuffer spectrum = read_signal(source.substr(file_prefix.size()));
        if (spectrum.size() != length) {
            throw ShapeError(source + " holds " + std::to_string(spectrum.size()) + " samples, expected " +
                             std::to_string(length));
        }
        return spectrum;
    }
    if (source != "oracle" && !kAlgorithms.contains(source)) {
        throw UsageError("unknown spectrum source '" + source + "' (mixed, split, oracle, file:PATH)");
    }
    return transform_with(source, length, direction, input);
}

struct TransformArgs {
    std::optional<std::size_t> length;
    std::string direction = "forward";
    std::string algorithm = "mixed";
    std::string input;
    std::string signal;
    std::uint64_t seed = 0;
    std::string output;
    std::string format;
};

int do_transform(const TransformArgs& a, std::ostream& out) {
    SignalBuffer input;
    if (!a.input.empty()) {
        input = read_signal(a.input);
        if (a.length && *a.length != input.size()) {
            throw ShapeError("--length " + std::to_string(*a.length) + " does not match " +
                             std::to_string(input.size()) + " samples in " + a.input);
        }
    } else {
        if (!a.length) {
            throw UsageError("--length is required with --signal");
        }
        input = generate(signal_kind(a.signal.empty() ? "ramp" : a.signal), *a.length, a.seed);
    }
    if (!all_finite(input)) {
        throw DomainError("input contains non-finite samples");
    }

    const SignalBuffer output = transform_with(a.algorithm, input.size(), kDirections.at(a.direction), input);

    SignalFormat format = SignalFormat::Csv;
    if (!a.format.empty()) {
        format = a.format == "json" ? SignalFormat::Json : SignalFormat::Csv;
    } else if (!a.output.empty()) {
        format = format_for_path(a.output);
    }
    if (a.output.empty() || a.output == "-") {
        out << format_signal(output, format);
    } else {
        write_signal(a.output, output, format);
    }
    return kSuccess;
}

struct PlanArgs {
    std::size_t length = 0;
    std::string algorithm = "mixed";
    std::string direction = "forward";
};

int do_plan(const PlanArgs& a, std::ostream& out) {
    const FftPlan plan = make_plan(a.length, kDirections.at(a.direction), kAlgorithms.at(a.algorithm));
    out << "length: " << plan.length() << '\n'
        << "direction: " << to_string(plan.direction()) << '\n'
        << "algorithm: " << to_string(plan.algorithm()) << '\n'
        << "stages: " << join(plan.stages()) << '\n'
        << "permutation_length: " << plan.permutation().size() << '\n'
        << "twiddle_count: " << plan.twiddles().size() << '\n'
        << "scale: " << std::setprecision(9) << plan.scale() << '\n'
        << "chunk: " << plan.chunk() << '\n'
        << "butterflies: " << count_butterflies(plan) << '\n';
    return kSuccess;
}

struct BenchArgs {
    std::string lengths = "8:2048:pow2";
    std::size_t iterations = 1000;
    std::size_t warmup = 1;
    std::string algorithm = "mixed";
    std::string signal = "ramp";
    std::uint64_t seed = 0;
    double outlier_factor = 10.0;
    std::string outlier_reference = "median";
    std::string records;
    std::string summary;
};

RecordFormat record_format_for(const std::string& path) {
    return format_for_path(path) == SignalFormat::Json ? RecordFormat::Json : RecordFormat::Csv;
}

int do_bench(const BenchArgs& a, std::ostream& out, std::ostream& err) {
    BenchmarkConfig config;
    config.lengths = parse_lengths(a.lengths);
    config.iterations = a.iterations;
    config.warmup = a.warmup;
    config.algorithm = kAlgorithms.at(a.algorithm);
    config.signal = signal_kind(a.signal);
    config.seed = a.seed;
    if (config.iterations == 0) {
        throw UsageError("--iterations must be at least 1");
    }

    OutlierRule rule;
    rule.factor = a.outlier_factor;
    rule.reference = a.outlier_reference == "mean" ? OutlierReference::Mean : OutlierReference::Median;
    if (!(rule.factor > 1.0)) {
        throw UsageError("--outlier-factor must exceed 1");
    }

    BenchmarkRun run = run_benchmark(config);
    mark_outliers(run.records, rule);
    const std::vector<BenchmarkSummary> summaries =
        run.records.empty() ? std::vector<BenchmarkSummary>{} : summarize(run.records, rule);

    if (!a.records.empty()) {
        export_records(run.records, record_format_for(a.records), a.records);
    }
    if (!a.summary.empty()) {
        write_text_file(a.summary, format_summaries(summaries, rule, record_format_for(a.summary)));
    }

    out << "length  kept  outliers  mean_us  stddev_us  optimal_us\n";
    for (const BenchmarkSummary& s : summaries) {
        char line[160];
        std::snprintf(line, sizeof line, "%6zu %5zu %9zu %8.3f %10.3f %11.3f\n", s.length, s.iterations_kept,
                      s.outliers_discarded, s.mean_us, s.stddev_us, s.optimal_us);
        out << line;
    }
    for (const LengthChecksum& c : run.checksums) {
        if (!c.consistent) {
            err << "warning: length " << c.length << " produced differing outputs across iterations\n";
        }
    }
    for (const LengthError& e : run.errors) {
        err << "error: length " << e.length << ": " << e.message << '\n';
    }
    return run.errors.empty() ? kSuccess : kUnsupportedLength;
}

struct VerifyArgs {
    std::size_t length = 0;
    std::string signal = "ramp";
    std::uint64_t seed = 0;
    std::string direction = "forward";
    std::string lhs;
    std::string rhs;
    std::optional<std::size_t> bins;
    std::string bin_on = "magnitude";
    std::string report;
    std::optional<double> fail_under_p;
};

int do_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    const Direction direction = kDirections.at(a.direction);
    const SignalBuffer input = generate(signal_kind(a.signal), a.length, a.seed);
    const SignalBuffer lhs = spectrum_for(a.lhs, a.length, direction, input);
    const SignalBuffer rhs = spectrum_for(a.rhs, a.length, direction, input);
    const BinOn basis = parse_bin_on(a.bin_on).value_or(BinOn::Magnitude);

    const ChiSquareReport report = compare_spectra(lhs, rhs, a.bins.value_or(a.length), basis);

    nlohmann::ordered_json doc;
    doc["chi2_reduced"] = report.chi2_reduced;
    doc["ndf"] = report.ndf;
    doc["p_value"] = report.p_value;
    doc["bins_used"] = report.bins_used;
    doc["bins_skipped"] = report.bins_skipped;
    doc["max_rel_diff"] = report.max_rel_diff;
    doc["abs_diff_max"] = report.abs_diff_max;
    if (report.degenerate_histogram) {
        doc["degenerate_histogram"] = true;
        err << "warning: all compared values are identical; single-bin histogram used\n";
    }
    const std::string text = doc.dump(2) + "\n";
    if (!a.report.empty()) {
        write_text_file(a.report, text);
    }
    out << text;

    if (a.fail_under_p && report.p_value < *a.fail_under_p) {
        err << "verification failed: p_value " << report.p_value << " < " << *a.fail_under_p << '\n';
        return kVerificationFailed;
    }
    return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stagefft: mixed-radix and split-radix FFT toolkit"};
    app.require_subcommand(1);

    const auto direction_check = CLI::IsMember({"forward", "inverse"});

    TransformArgs t;
    auto* transform = app.add_subcommand("transform", "Transform a signal file or generated signal");
    transform->add_option("--length", t.length, "Transform length");
    transform->add_option("--direction", t.direction)->check(direction_check);
    transform->add_option("--algorithm", t.algorithm)->check(CLI::IsMember({"mixed", "split", "oracle"}));
    auto* input_opt = transform->add_option("--input", t.input, "Signal file (.csv or .json)");
    auto* signal_opt = transform->add_option("--signal", t.signal, "ramp|impulse|constant|random");
    input_opt->excludes(signal_opt);
    transform->add_option("--seed", t.seed);
    transform->add_option("--output", t.output, "Output path (default stdout)");
    transform->add_option("--format", t.format)->check(CLI::IsMember({"csv", "json"}));

    PlanArgs p;
    auto* plan = app.add_subcommand("plan", "Show the execution plan for a length");
    plan->add_option("--length", p.length)->required();
    plan->add_option("--algorithm", p.algorithm)->check(CLI::IsMember({"mixed", "split"}));
    plan->add_option("--direction", p.direction)->check(direction_check);

    BenchArgs b;
    auto* bench = app.add_subcommand("bench", "Run the timing protocol");
    bench->add_option("--lengths", b.lengths, "LO:HI:pow2 or comma list");
    bench->add_option("--iterations", b.iterations);
    bench->add_option("--warmup", b.warmup);
    bench->add_option("--algorithm", b.algorithm)->check(CLI::IsMember({"mixed", "split"}));
    bench->add_option("--signal", b.signal);
    bench->add_option("--seed", b.seed);
    bench->add_option("--outlier-factor", b.outlier_factor);
    bench->add_option("--outlier-reference", b.outlier_reference)->check(CLI::IsMember({"median", "mean"}));
    bench->add_option("--records", b.records, "Per-iteration records (.csv or .json)");
    bench->add_option("--summary", b.summary, "Per-length summary (.json or .csv)");

    VerifyArgs v;
    auto* verify = app.add_subcommand("verify", "Compare two spectra with a reduced chi-square test");
    verify->add_option("--length", v.length)->required();
    verify->add_option("--signal", v.signal);
    verify->add_option("--seed", v.seed);
    verify->add_option("--direction", v.direction)->check(direction_check);
    verify->add_option("--lhs", v.lhs, "mixed|split|oracle|file:PATH")->required();
    verify->add_option("--rhs", v.rhs, "mixed|split|oracle|file:PATH (reference)")->required();
    verify->add_option("--bins", v.bins);
    verify->add_option("--bin-on", v.bin_on)->check(CLI::IsMember({"magnitude", "real", "imag"}));
    verify->add_option("--report", v.report, "Write the JSON report here");
    verify->add_option("--fail-under-p", v.fail_under_p);

    std::vector<const char*> argv{"stagefft"};
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (transform->parsed()) {
            return do_transform(t, out);
        }
        if (plan->parsed()) {
            return do_plan(p, out);
        }
        if (bench->parsed()) {
            return do_bench(b, out, err);
        }
        if (verify->parsed()) {
            return do_verify(v, out, err);
        }
    } catch (const InvalidLength& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupportedLength;
    } catch (const UnsupportedLength& e) {
        err << "error: " << e.what() << '\n';
        return kUnsupportedLength;
    } catch (const FileError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

}  // namespace stagefft::cli
