#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mcls {

// Base of all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command-line or config usage (CLI exit 2).
struct UsageError : Error {
    using Error::Error;
};

// Filesystem / stream failures (CLI exit 3).
struct IoError : Error {
    using Error::Error;
};

// Data validation and numeric failures (CLI exit 4).
struct DataError : Error {
    using Error::Error;
};

struct MissingColumn : DataError {
    explicit MissingColumn(const std::string& column)
        : DataError("missing required column: " + column), column(column) {}
    std::string column;
};

struct BadLabel : DataError {
    BadLabel(std::size_t row, const std::string& value)
        : DataError("row " + std::to_string(row) + ": bad label \"" + value +
                    "\" (expected 0 or 1)"),
          row(row), value(value) {}
    std::size_t row;
    std::string value;
};

struct EncodingError : DataError {
    using DataError::DataError;
};

struct MalformedRecord : DataError {
    using DataError::DataError;
};

struct EmptyContent : DataError {
    explicit EmptyContent(std::size_t row)
        : DataError("row " + std::to_string(row) + ": content is empty"), row(row) {}
    std::size_t row;
};

struct EmptyDataset : DataError {
    using DataError::DataError;
};

struct BadHeader : DataError {
    using DataError::DataError;
};

struct DimMismatch : DataError {
    explicit DimMismatch(const std::string& what) : DataError(what), line(0) {}
    DimMismatch(const std::string& what, std::size_t line) : DataError(what), line(line) {}
    std::size_t line;
};

struct NumberParseError : DataError {
    NumberParseError(const std::string& what, std::size_t line) : DataError(what), line(line) {}
    std::size_t line;
};

struct ShapeMismatch : DataError {
    using DataError::DataError;
};

struct IndexOutOfRange : DataError {
    using DataError::DataError;
};

struct NotScalarLoss : DataError {
    using DataError::DataError;
};

struct BadTarget : DataError {
    using DataError::DataError;
};

struct NonFiniteLoss : DataError {
    NonFiniteLoss(std::size_t epoch, std::size_t batch)
        : DataError("non-finite loss at epoch " + std::to_string(epoch) + ", batch " +
                    std::to_string(batch)),
          epoch(epoch), batch(batch) {}
    std::size_t epoch;
    std::size_t batch;
};

struct LengthMismatch : DataError {
    using DataError::DataError;
};

// Checkpoint file errors.
struct BadMagic : DataError {
    using DataError::DataError;
};

struct VersionUnsupported : DataError {
    using DataError::DataError;
};

struct ChecksumMismatch : DataError {
    using DataError::DataError;
};

struct TruncatedFile : DataError {
    using DataError::DataError;
};

struct BadCheckpoint : DataError {
    using DataError::DataError;
};

struct VocabMismatch : DataError {
    using DataError::DataError;
};

}  // namespace mcls
