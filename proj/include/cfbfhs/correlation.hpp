#pragma once

#include "cfbfhs/hop_mapping.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace cfbfhs {

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }
    double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

    /// Decimal rounded half away from zero, e.g. "255.7019".
    std::string to_decimal(int places = 4) const;
    std::string to_fraction() const;

    bool operator==(const Rational&) const = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept;
    friend std::strong_ordering operator<=>(const Rational& a, std::int64_t b) noexcept;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// G_uv(delay) = #{ i in [0, n') : u(i) = v((i + delay) mod n') }.
std::size_t hamming_correlation(const HopSequence& u, const HopSequence& v, std::size_t delay);

/// G_uv(delay) for every delay 0..n'-1.
std::vector<std::size_t> hamming_profile(const HopSequence& u, const HopSequence& v);

enum class ProfileKind { autocorrelation, crosscorrelation };

struct CorrelationProfile {
    std::size_t u = 0;
    std::size_t v = 0;
    ProfileKind kind = ProfileKind::autocorrelation;
    std::vector<std::size_t> values;
};

CorrelationProfile correlation_profile(const SequenceSet& set, std::size_t u, std::size_t v);

/// (n'q - M) n' / ((n'q - 1) M), the lower bound on the maximum Hamming
/// correlation of any family of q sequences of length n' over M spots.
Rational peng_fan_bound(std::uint64_t length, std::uint64_t q, std::uint64_t spots);

struct PairViolation {
    std::size_t u = 0;
    std::size_t v = 0;
    std::size_t count = 0;

    bool operator==(const PairViolation&) const = default;
};

/// Pairs u < v with G_uv(0) != 0; empty means orthogonal at zero delay.
std::vector<PairViolation> verify_orthogonality(const SequenceSet& set);

std::vector<std::size_t> frequency_histogram(const HopSequence& seq);

/// Largest Z with G_uv(d) = 0 for all u != v and all |d| <= Z (cyclic).
/// n'-1 when there are no cross pairs, -1 when G_uv(0) != 0 for some pair.
long long no_hit_zone_width(const SequenceSet& set);

struct AnalysisReport {
    std::size_t max_hamming = 0;
    Rational peng_fan{0, 1};
    bool orthogonal_at_zero = false;
    long long no_hit_zone = 0;
    std::vector<std::vector<std::size_t>> histograms;
    std::vector<PairViolation> violations;
    /// Every pair u <= v.
    std::vector<CorrelationProfile> profiles;
};

AnalysisReport analyze_set(const SequenceSet& set);

/// Max over cross profiles at every delay and auto profiles at delay != 0.
std::size_t max_hamming_correlation(const std::vector<CorrelationProfile>& profiles);

} // namespace cfbfhs
