#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "stagefft/signalgen.hpp"
#include "stagefft/types.hpp"

namespace stagefft {

/// One timed execution. Records of a run are in execution order; the first
/// `warmup` of each length are flagged and never enter the statistics.
struct BenchmarkRecord {
    std::size_t length = 0;
    std::size_t iteration = 0;
    double dispatch_us = 0.0;
    double compute_us = 0.0;
    double total_us = 0.0;
    bool warmup = false;
    bool outlier = false;

    friend bool operator==(const BenchmarkRecord&, const BenchmarkRecord&) = default;
};

struct BenchmarkConfig {
    std::vector<std::size_t> lengths = default_lengths();
    std::size_t iterations = 1000;
    std::size_t warmup = 1;
    Algorithm algorithm = Algorithm::MixedRadix;
    Direction direction = Direction::Forward;
    SignalKind signal = SignalKind::Ramp;
    std::uint64_t seed = 0;

    // Powers of two from 8 to 2048.
    static std::vector<std::size_t> default_lengths();
};

struct LengthError {
    std::size_t length = 0;
    std::string message;
};

struct LengthChecksum {
    std::size_t length = 0;
    // FNV-1a over the output bytes of the first execution (warmup included).
    std::uint64_t checksum = 0;
    // False if any iteration produced different output bytes.
    bool consistent = true;
};

struct BenchmarkRun {
    std::vector<BenchmarkRecord> records;
    std::vector<LengthChecksum> checksums;
    std::vector<LengthError> errors;
};

/// Builds one plan and one input per length and times warmup + iterations
/// executions. A length that cannot be planned yields an error entry and
/// the remaining lengths still run. Throws DomainError when iterations == 0.
BenchmarkRun run_benchmark(const BenchmarkConfig& config);

enum class OutlierReference { Median, Mean };

struct OutlierRule {
    double factor = 10.0;
    OutlierReference reference = OutlierReference::Median;
};

/// Statistics over the non-warmup records of one length. Variance is the
/// population variance of the kept (non-outlier) totals; optimal_us is the
/// minimum over all non-warmup records, outliers included.
struct BenchmarkSummary {
    std::size_t length = 0;
    std::size_t iterations_kept = 0;
    std::size_t outliers_discarded = 0;
    std::size_t warmups = 0;
    double mean_us = 0.0;
    double variance_us2 = 0.0;
    double stddev_us = 0.0;
    double optimal_us = 0.0;
    double max_kept_us = 0.0;

    friend bool operator==(const BenchmarkSummary&, const BenchmarkSummary&) = default;
};

inline constexpr const char* kVarianceConvention = "population";

/// Sets the outlier flag on every non-warmup record whose total exceeds
/// factor x reference(totals), reference being the median (default) or mean
/// of the non-warmup totals of the same length. Throws DomainError when
/// factor <= 1.
void mark_outliers(std::vector<BenchmarkRecord>& records, const OutlierRule& rule = {});

/// One summary per length, in order of first appearance. Outliers are
/// determined by `rule` (the records' own flags are ignored). Throws
/// EmptySample if a length has only warmup records.
std::vector<BenchmarkSummary> summarize(const std::vector<BenchmarkRecord>& records, const OutlierRule& rule = {});

enum class RecordFormat { Csv, Json };

/// Column order: length, iteration, warmup, outlier, dispatch_us,
/// compute_us, total_us. Floats use the shortest round-trip representation.
std::string format_records(const std::vector<BenchmarkRecord>& records, RecordFormat format);
std::vector<BenchmarkRecord> parse_records(const std::string& text, RecordFormat format);

/// Throws FileError naming the path on I/O failure.
void export_records(const std::vector<BenchmarkRecord>& records, RecordFormat format,
                    const std::filesystem::path& destination);
std::vector<BenchmarkRecord> import_records(const std::filesystem::path& source, RecordFormat format);

std::string format_summaries(const std::vector<BenchmarkSummary>& summaries, const OutlierRule& rule,
                             RecordFormat format);

// FNV-1a 64 over the raw bytes of the samples.
std::uint64_t checksum(SignalView samples);

}  // namespace stagefft
