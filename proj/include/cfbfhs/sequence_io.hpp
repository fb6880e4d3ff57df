#pragma once

#include "cfbfhs/balancer.hpp"
#include "cfbfhs/correlation.hpp"
#include "cfbfhs/fairness.hpp"
#include "cfbfhs/lfsr.hpp"

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace cfbfhs {

/// Text format: a header `# M=<M> n=<n'> q=<q> kind=<base|balanced>`, then one
/// sequence per line as comma-separated decimal spot indices.
std::string format_sequence_set(const SequenceSet& set);

/// Throws ParseError with the 1-based line and column of the first problem.
SequenceSet parse_sequence_set(std::string_view text, const std::string& source = "<input>");

SequenceSet read_sequence_file(const std::filesystem::path& path);

/// "1,1,0,1" -> {1, 1, 0, 1}, lowest degree first.
Polynomial parse_polynomial(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

/// Writes via a sibling temporary file and rename; creates parent directories.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Shortest round-trip decimal, independent of the locale.
std::string format_double(double value);

std::string ledger_ops_csv(const OperationLedger& ledger);
std::string ledger_usage_csv(const OperationLedger& ledger);
std::string histogram_csv(const std::vector<std::vector<std::size_t>>& histograms);
std::string profile_csv(const CorrelationProfile& profile);
std::string fairness_csv(const FairnessReport& report);

} // namespace cfbfhs
