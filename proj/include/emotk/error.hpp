#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace emotk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// File could not be opened, read, or written.
class IoError : public Error {
public:
    using Error::Error;
};

/// Structural problem in an input file. line() is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(const std::string& path, std::size_t line, const std::string& what)
        : Error(path + (line ? ":" + std::to_string(line) : std::string{}) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A label string outside the 7-emotion taxonomy.
class LabelError : public ParseError {
public:
    LabelError(const std::string& path, std::size_t line, const std::string& label)
        : ParseError(path, line, "label '" + label + "' is not one of the 7 target emotions"), label_(label) {}

    const std::string& label() const noexcept { return label_; }

private:
    std::string label_;
};

/// Invalid or inconsistent taxonomy mapping.
class MappingError : public Error {
public:
    using Error::Error;
};

/// Sequences that must be aligned row-for-row differ in length.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// An auxiliary pool too small to cover a class deficit.
class DeficitError : public Error {
public:
    using Error::Error;
};

/// Invalid parameters (bad sampler configuration, tie policy, empty inputs).
class ConfigError : public Error {
public:
    using Error::Error;
};

}  // namespace emotk
