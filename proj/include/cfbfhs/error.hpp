#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfbfhs {

enum class ErrorKind {
    invalid_polynomial,
    degenerate_seed,
    unsupported_degree,
    family_size,
    index_out_of_range,
    empty_sequence,
    incompatible_sequence,
    incompatible_set,
    singular_fit,
    division_by_zero,
    unsupported_delay,
    invalid_argument,
    parse,
    config,
    io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// All library failures are reported through this exception; `kind()` is the
/// stable machine-readable part, `what()` the human-readable detail.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// q outside [1, M].
class FamilySizeError : public Error {
public:
    FamilySizeError(long long q, long long spots);

    long long q() const noexcept { return q_; }
    long long spots() const noexcept { return spots_; }

private:
    long long q_;
    long long spots_;
};

/// Sequence-file syntax error at a 1-based line/column.
class ParseError : public Error {
public:
    ParseError(std::string source, std::size_t line, std::size_t column, const std::string& detail);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace cfbfhs
