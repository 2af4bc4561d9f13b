#include "stagefft/signal_io.hpp"

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stagefft {
namespace {

std::string_view trim(std::string_view s) {
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

float parse_float(std::string_view token, std::size_t line) {
    token = trim(token);
    if (!token.empty() && token.front() == '+') {
        token.remove_prefix(1);
    }
    float value = 0.0f;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
        throw ParseError("line " + std::to_string(line) + ": invalid number '" + std::string(token) + "'");
    }
    return value;
}

SignalBuffer parse_csv(std::string_view text) {
    SignalBuffer signal;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto eol = text.find('\n');
        const std::string_view line = trim(text.substr(0, eol));
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (signal.empty() && line == "re,im") {
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string_view::npos || line.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 're,im'");
        }
        signal.emplace_back(parse_float(line.substr(0, comma), line_no), parse_float(line.substr(comma + 1), line_no));
    }
    return signal;
}

SignalBuffer parse_json(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_array()) {
        throw ParseError("signal JSON must be an array of [re, im] pairs");
    }
    SignalBuffer signal;
    signal.reserve(doc.size());
    for (std::size_t i = 0; i < doc.size(); ++i) {
        const auto& pair = doc[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw ParseError("signal JSON element " + std::to_string(i) + " is not a [re, im] pair");
        }
        signal.emplace_back(pair[0].get<float>(), pair[1].get<float>());
    }
    return signal;
}

void append_float(std::string& out, float value) {
    char buf[32];
    const int len = std::snprintf(buf, sizeof buf, "%.9g", static_cast<double>(value));
    out.append(buf, static_cast<std::size_t>(len));
}

}  // namespace

SignalBuffer parse_signal(std::string_view text, SignalFormat format) {
    return format == SignalFormat::Json ? parse_json(text) : parse_csv(text);
}

std::string format_signal(SignalView signal, SignalFormat format) {
    std::string out;
    if (format == SignalFormat::Json) {
        out += '[';
        for (std::size_t i = 0; i < signal.size(); ++i) {
            out += i == 0 ? "[" : ",[";
            append_float(out, signal[i].real());
            out += ',';
            append_float(out, signal[i].imag());
            out += ']';
        }
        out += "]\n";
        return out;
    }
    for (const ComplexSample& z : signal) {
        append_float(out, z.real());
        out += ',';
        append_float(out, z.imag());
        out += '\n';
    }
    return out;
}

SignalFormat format_for_path(const std::filesystem::path& path) {
    return path.extension() == ".json" ? SignalFormat::Json : SignalFormat::Csv;
}

SignalBuffer read_signal(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return parse_signal(text, format_for_path(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

void write_signal(const std::filesystem::path& path, SignalView signal, SignalFormat format) {
    write_text_file(path, format_signal(signal, format));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FileError(path.string(), std::strerror(errno));
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw FileError(path.string(), "read failed");
    }
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FileError(path.string(), std::strerror(errno));
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    out.flush();
    if (!out) {
        throw FileError(path.string(), "write failed");
    }
}

}  // namespace stagefft
