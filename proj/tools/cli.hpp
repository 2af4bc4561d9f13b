#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stagefft::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 2,
    kUnsupportedLength = 3,
    kIoError = 4,
    kVerificationFailed = 5,
};

// Runs one command line. `args` excludes the program name. Never throws;
// every failure maps onto an ExitCode and a message on `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stagefft::cli
