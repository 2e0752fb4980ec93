#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trendclass {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidTweetError : public Error {
public:
    using Error::Error;
};

class EmptyTrendError : public Error {
public:
    EmptyTrendError() : Error("trend has no tweets") {}
    using Error::Error;
};

/// Malformed corpus record. Carries the 1-based line number it came from.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateTopicError : public Error {
public:
    using Error::Error;
};

class UnknownLabelError : public Error {
public:
    using Error::Error;
};

class DegenerateTrainingError : public Error {
public:
    using Error::Error;
};

class DimensionMismatchError : public Error {
public:
    using Error::Error;
};

class MissingClassError : public Error {
public:
    using Error::Error;
};

class CorruptModelError : public Error {
public:
    using Error::Error;
};

class InvalidArgumentError : public Error {
public:
    using Error::Error;
};

} // namespace trendclass
