#pragma once

#include <stdexcept>
#include <string>

namespace stagefft {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Length is zero, not a power of two, or otherwise malformed.
class InvalidLength : public Error {
public:
    using Error::Error;
};

// Well-formed length outside the range the engine supports (8..2048).
class UnsupportedLength : public Error {
public:
    using Error::Error;
};

class InvalidPlan : public Error {
public:
    using Error::Error;
};

// Mismatched buffer or histogram shapes.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Non-finite samples, negative statistics, and similar out-of-domain inputs.
class DomainError : public Error {
public:
    using Error::Error;
};

class EmptySample : public Error {
public:
    using Error::Error;
};

class InsufficientData : public Error {
public:
    using Error::Error;
};

class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Malformed signal or record text.
class ParseError : public Error {
public:
    using Error::Error;
};

class FileError : public Error {
public:
    FileError(const std::string& path, const std::string& what)
        : Error(path + ": " + what), path_(path) {}

    const std::string& path() const noexcept { return path_; }

private:
    std::string path_;
};

}  // namespace stagefft
