#include "cfbfhs/error.hpp"

namespace cfbfhs {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::invalid_polynomial: return "invalid-polynomial";
    case ErrorKind::degenerate_seed: return "degenerate-seed";
    case ErrorKind::unsupported_degree: return "unsupported-degree";
    case ErrorKind::family_size: return "family-size-violation";
    case ErrorKind::index_out_of_range: return "index-out-of-range";
    case ErrorKind::empty_sequence: return "empty-sequence";
    case ErrorKind::incompatible_sequence: return "incompatible-sequence";
    case ErrorKind::incompatible_set: return "incompatible-set";
    case ErrorKind::singular_fit: return "singular-fit";
    case ErrorKind::division_by_zero: return "division-by-zero";
    case ErrorKind::unsupported_delay: return "unsupported-delay";
    case ErrorKind::invalid_argument: return "invalid-argument";
    case ErrorKind::parse: return "parse-error";
    case ErrorKind::config: return "config-error";
    case ErrorKind::io: return "io-error";
    }
    return "unknown";
}

FamilySizeError::FamilySizeError(long long q, long long spots)
    : Error(ErrorKind::family_size,
            "family size q=" + std::to_string(q) + " must satisfy 1 <= q <= M=" + std::to_string(spots)),
      q_(q), spots_(spots)
{
}

ParseError::ParseError(std::string source, std::size_t line, std::size_t column, const std::string& detail)
    : Error(ErrorKind::parse,
            source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + detail),
      line_(line), column_(column)
{
}

} // namespace cfbfhs
