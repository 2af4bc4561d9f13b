#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "stagefft/error.hpp"
#include "stagefft/types.hpp"

namespace stagefft {

enum class SignalFormat { Csv, Json };

/// CSV: one `re,im` pair per line, optional leading `re,im` header line.
/// JSON: array of [re, im] pairs. Throws ParseError on malformed text.
SignalBuffer parse_signal(std::string_view text, SignalFormat format);

/// CSV output has no header and uses 9 significant digits, which round-trips
/// every float exactly.
std::string format_signal(SignalView signal, SignalFormat format);

/// `.json` selects JSON, anything else CSV.
SignalFormat format_for_path(const std::filesystem::path& path);

SignalBuffer read_signal(const std::filesystem::path& path);
void write_signal(const std::filesystem::path& path, SignalView signal, SignalFormat format);

/// Whole-file helpers. Throw FileError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace stagefft
