#pragma once

#include "cfbfhs/hop_mapping.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cfbfhs {

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares y = slope * x + intercept.
LineFit fit_linear(std::span<const double> xs, std::span<const double> ys);

struct FairnessPoint {
    std::size_t q = 0;
    std::uint64_t tau = 0;
    std::vector<std::size_t> per_sequence_ops;
    double mean_ops = 0.0;
    double normalized = 0.0;
};

/// Mean rewrite count per sequence for every family size 1..M, normalised
/// by its maximum, with the least-squares line through (q, normalized).
struct FairnessReport {
    std::vector<FairnessPoint> points;
    LineFit fit;
};

/// `tau` fixes the shift for every q; when absent each q uses default_tau.
FairnessReport mean_operation_curve(const MSequence& mseq, const FrequencyPlan& plan,
                                    std::optional<std::uint64_t> tau = std::nullopt);

} // namespace cfbfhs
