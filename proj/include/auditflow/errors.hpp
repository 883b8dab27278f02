#pragma once

#include <stdexcept>
#include <string>

namespace auditflow {

/// Malformed input data or configuration (bad timestamp, missing column, bad config key).
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rule DSL syntax or semantic error with source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// Two sources claim the same (case_id, layer, ordinal) triple.
class ConflictError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An operation's stated precondition does not hold.
class PreconditionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incremental input rewinds behind the checkpoint watermark.
class StalenessError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An event carries a layer tag other than the one its source promised.
class TaggingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Lookup of a case or resource that does not exist.
class NotFoundError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Filesystem or network failure.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace auditflow
