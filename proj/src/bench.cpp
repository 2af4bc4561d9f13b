#include "stagefft/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstring>
#include <limits>
#include <map>
#include <optional>

#include <json.hpp>

#include "stagefft/error.hpp"
#include "stagefft/executor.hpp"
#include "stagefft/planner.hpp"
#include "stagefft/signal_io.hpp"

namespace stagefft {
namespace {

constexpr std::string_view kCsvHeader = "length,iteration,warmup,outlier,dispatch_us,compute_us,total_us";

double median(std::vector<double> values) {
    const std::size_t n = values.size();
    const auto mid = values.begin() + static_cast<std::ptrdiff_t>(n / 2);
    std::nth_element(values.begin(), mid, values.end());
    if (n % 2 == 1) {
        return *mid;
    }
    const double upper = *mid;
    const double lower = *std::max_element(values.begin(), mid);
    return 0.5 * (lower + upper);
}

double mean(const std::vector<double>& values) {
    double sum = 0.0;
    for (double v : values) {
        sum += v;
    }
    return sum / static_cast<double>(values.size());
}

void check_rule(const OutlierRule& rule) {
    if (!(rule.factor > 1.0)) {
        throw DomainError("outlier factor must exceed 1");
    }
}

// Groups indices of records by length, preserving first-appearance order.
std::vector<std::pair<std::size_t, std::vector<std::size_t>>> group_by_length(
    const std::vector<BenchmarkRecord>& records) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> groups;
    std::map<std::size_t, std::size_t> slot;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto [it, inserted] = slot.try_emplace(records[i].length, groups.size());
        if (inserted) {
            groups.emplace_back(records[i].length, std::vector<std::size_t>{});
        }
        groups[it->second].second.push_back(i);
    }
    return groups;
}

// Threshold above which a non-warmup total counts as an outlier, or +inf
// when the group has no non-warmup records.
double outlier_threshold(const std::vector<BenchmarkRecord>& records, const std::vector<std::size_t>& group,
                         const OutlierRule& rule) {
    std::vector<double> totals;
    for (std::size_t i : group) {
        if (!records[i].warmup) {
            totals.push_back(records[i].total_us);
        }
    }
    if (totals.empty()) {
        return std::numeric_limits<double>::infinity();
    }
    const double reference = rule.reference == OutlierReference::Median ? median(totals) : mean(totals);
    return rule.factor * reference;
}

void append_double(std::string& out, double value) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    out.append(buf, ptr);
}

template <class T>
T parse_number(std::string_view token, std::size_t line) {
    T value{};
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("record line " + std::to_string(line) + ": invalid field '" + std::string(token) + "'");
    }
    return value;
}

bool parse_flag(std::string_view token, std::size_t line) {
    if (token == "0") {
        return false;
    }
    if (token == "1") {
        return true;
    }
    throw ParseError("record line " + std::to_string(line) + ": flag must be 0 or 1, got '" + std::string(token) +
                     "'");
}

std::vector<BenchmarkRecord> parse_csv(std::string_view text) {
    std::vector<BenchmarkRecord> records;
    std::size_t line_no = 0;
    bool header_seen = false;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        if (!header_seen) {
            if (line != kCsvHeader) {
                throw ParseError("record CSV header must be '" + std::string(kCsvHeader) + "'");
            }
            header_seen = true;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        while (true) {
            const auto comma = line.find(',', start);
            fields.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
            if (comma == std::string_view::npos) {
                break;
            }
            start = comma + 1;
        }
        if (fields.size() != 7) {
            throw ParseError("record line " + std::to_string(line_no) + ": expected 7 fields");
        }
        BenchmarkRecord r;
        r.length = parse_number<std::size_t>(fields[0], line_no);
        r.iteration = parse_number<std::size_t>(fields[1], line_no);
        r.warmup = parse_flag(fields[2], line_no);
        r.outlier = parse_flag(fields[3], line_no);
        r.dispatch_us = parse_number<double>(fields[4], line_no);
        r.compute_us = parse_number<double>(fields[5], line_no);
        r.total_us = parse_number<double>(fields[6], line_no);
        records.push_back(r);
    }
    if (!header_seen) {
        throw ParseError("record CSV is missing its header");
    }
    return records;
}

std::vector<BenchmarkRecord> parse_json(std::string_view text) {
    std::vector<BenchmarkRecord> records;
    try {
        const nlohmann::json doc = nlohmann::json::parse(text);
        for (const auto& item : doc.at("records")) {
            BenchmarkRecord r;
            r.length = item.at("length").get<std::size_t>();
            r.iteration = item.at("iteration").get<std::size_t>();
            r.warmup = item.at("warmup").get<bool>();
            r.outlier = item.at("outlier").get<bool>();
            r.dispatch_us = item.at("dispatch_us").get<double>();
            r.compute_us = item.at("compute_us").get<double>();
            r.total_us = item.at("total_us").get<double>();
            records.push_back(r);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid record JSON: ") + e.what());
    }
    return records;
}

}  // namespace

std::vector<std::size_t> BenchmarkConfig::default_lengths() {
    std::vector<std::size_t> lengths;
    for (std::size_t n = kMinLength; n <= kMaxLength; n *= 2) {
        lengths.push_back(n);
    }
    return lengths;
}

std::uint64_t checksum(SignalView samples) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    const auto* bytes = reinterpret_cast<const unsigned char*>(samples.data());
    for (std::size_t i = 0; i < samples.size_bytes(); ++i) {
        hash ^= bytes[i];
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

BenchmarkRun run_benchmark(const BenchmarkConfig& config) {
    if (config.iterations == 0) {
        throw DomainError("benchmark needs at least one iteration");
    }
    BenchmarkRun run;
    for (std::size_t n : config.lengths) {
        std::optional<FftPlan> plan;
        try {
            plan.emplace(make_plan(n, config.direction, config.algorithm));
        } catch (const Error& e) {
            run.errors.push_back({n, e.what()});
            continue;
        }
        const SignalBuffer input = generate(config.signal, n, config.seed);

        LengthChecksum sum{n, 0, true};
        bool have_sum = false;
        const std::size_t total = config.warmup + config.iterations;
        for (std::size_t i = 0; i < total; ++i) {
            const TimedTransform timed = execute_timed(*plan, input);
            BenchmarkRecord record;
            record.length = n;
            record.iteration = i;
            record.dispatch_us = timed.dispatch_us;
            record.compute_us = timed.compute_us;
            record.total_us = timed.total_us();
            record.warmup = i < config.warmup;
            run.records.push_back(record);

            const std::uint64_t h = checksum(timed.output);
            if (!have_sum) {
                sum.checksum = h;
                have_sum = true;
            } else if (h != sum.checksum) {
                sum.consistent = false;
            }
        }
        run.checksums.push_back(sum);
    }
    return run;
}

void mark_outliers(std::vector<BenchmarkRecord>& records, const OutlierRule& rule) {
    check_rule(rule);
    for (const auto& [length, group] : group_by_length(records)) {
        const double threshold = outlier_threshold(records, group, rule);
        for (std::size_t i : group) {
            records[i].outlier = !records[i].warmup && records[i].total_us > threshold;
        }
    }
}

std::vector<BenchmarkSummary> summarize(const std::vector<BenchmarkRecord>& records, const OutlierRule& rule) {
    check_rule(rule);
    std::vector<BenchmarkSummary> summaries;
    for (const auto& [length, group] : group_by_length(records)) {
        const double threshold = outlier_threshold(records, group, rule);
        BenchmarkSummary s;
        s.length = length;
        s.optimal_us = std::numeric_limits<double>::infinity();
        std::vector<double> kept;
        for (std::size_t i : group) {
            const BenchmarkRecord& r = records[i];
            if (r.warmup) {
                ++s.warmups;
                continue;
            }
            s.optimal_us = std::min(s.optimal_us, r.total_us);
            if (r.total_us > threshold) {
                ++s.outliers_discarded;
            } else {
                kept.push_back(r.total_us);
            }
        }
        if (kept.empty()) {
            throw EmptySample("length " + std::to_string(length) + " has no non-warmup records");
        }
        s.iterations_kept = kept.size();
        s.mean_us = mean(kept);
        double ss = 0.0;
        for (double v : kept) {
            ss += (v - s.mean_us) * (v - s.mean_us);
        }
        s.variance_us2 = ss / static_cast<double>(kept.size());
        s.stddev_us = std::sqrt(s.variance_us2);
        s.max_kept_us = *std::max_element(kept.begin(), kept.end());
        summaries.push_back(s);
    }
    return summaries;
}

std::string format_records(const std::vector<BenchmarkRecord>& records, RecordFormat format) {
    if (format == RecordFormat::Json) {
        nlohmann::ordered_json items = nlohmann::ordered_json::array();
        for (const BenchmarkRecord& r : records) {
            nlohmann::ordered_json item;
            item["length"] = r.length;
            item["iteration"] = r.iteration;
            item["warmup"] = r.warmup;
            item["outlier"] = r.outlier;
            item["dispatch_us"] = r.dispatch_us;
            item["compute_us"] = r.compute_us;
            item["total_us"] = r.total_us;
            items.push_back(item);
        }
        nlohmann::ordered_json doc;
        doc["time_unit"] = "us";
        doc["records"] = items;
        return doc.dump(1) + "\n";
    }
    std::string out(kCsvHeader);
    out += '\n';
    for (const BenchmarkRecord& r : records) {
        out += std::to_string(r.length);
        out += ',';
        out += std::to_string(r.iteration);
        out += r.warmup ? ",1" : ",0";
        out += r.outlier ? ",1," : ",0,";
        append_double(out, r.dispatch_us);
        out += ',';
        append_double(out, r.compute_us);
        out += ',';
        append_double(out, r.total_us);
        out += '\n';
    }
    return out;
}

std::vector<BenchmarkRecord> parse_records(const std::string& text, RecordFormat format) {
    return format == RecordFormat::Json ? parse_json(text) : parse_csv(text);
}

void export_records(const std::vector<BenchmarkRecord>& records, RecordFormat format,
                    const std::filesystem::path& destination) {
    write_text_file(destination, format_records(records, format));
}

std::vector<BenchmarkRecord> import_records(const std::filesystem::path& source, RecordFormat format) {
    return parse_records(read_text_file(source), format);
}

std::string format_summaries(const std::vector<BenchmarkSummary>& summaries, const OutlierRule& rule,
                             RecordFormat format) {
    const char* reference = rule.reference == OutlierReference::Median ? "median" : "mean";
    if (format == RecordFormat::Csv) {
        std::string out =
            "length,iterations_kept,outliers_discarded,warmups,mean_us,variance_us2,stddev_us,optimal_us\n";
        for (const BenchmarkSummary& s : summaries) {
            out += std::to_string(s.length) + ',' + std::to_string(s.iterations_kept) + ',' +
                   std::to_string(s.outliers_discarded) + ',' + std::to_string(s.warmups) + ',';
            append_double(out, s.mean_us);
            out += ',';
            append_double(out, s.variance_us2);
            out += ',';
            append_double(out, s.stddev_us);
            out += ',';
            append_double(out, s.optimal_us);
            out += '\n';
        }
        return out;
    }
    nlohmann::ordered_json doc;
    doc["time_unit"] = "us";
    doc["variance_convention"] = kVarianceConvention;
    doc["outlier_reference"] = reference;
    doc["outlier_factor"] = rule.factor;
    doc["optimal_includes_outliers"] = true;
    nlohmann::ordered_json items = nlohmann::ordered_json::array();
    for (const BenchmarkSummary& s : summaries) {
        nlohmann::ordered_json item;
        item["length"] = s.length;
        item["iterations_kept"] = s.iterations_kept;
        item["outliers_discarded"] = s.outliers_discarded;
        item["warmups"] = s.warmups;
        item["mean_us"] = s.mean_us;
        item["variance_us2"] = s.variance_us2;
        item["stddev_us"] = s.stddev_us;
        item["optimal_us"] = s.optimal_us;
        items.push_back(item);
    }
    doc["summaries"] = items;
    return doc.dump(1) + "\n";
}

}  // namespace stagefft
