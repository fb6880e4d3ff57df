#pragma once

#include "cfbfhs/lfsr.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace cfbfhs {

/// Index of a frequency spot f_0..f_{M-1}.
using Spot = std::uint32_t;

/// M = p^b frequency spots addressed by b-tuples over GF(p).
class FrequencyPlan {
public:
    FrequencyPlan(std::uint32_t p, std::size_t tuple_width);

    /// Plan with M spots; M must be a power of the prime p.
    static FrequencyPlan from_spots(std::uint32_t p, std::size_t spots);

    std::uint32_t p() const noexcept { return p_; }
    std::size_t tuple_width() const noexcept { return b_; }
    std::size_t spots() const noexcept { return spots_; }

    bool operator==(const FrequencyPlan&) const = default;

private:
    std::uint32_t p_;
    std::size_t b_;
    std::size_t spots_;
};

class HopSequence {
public:
    HopSequence(std::vector<Spot> hops, FrequencyPlan plan);

    std::size_t size() const noexcept { return hops_.size(); }
    Spot operator[](std::size_t index) const noexcept { return hops_[index]; }
    std::span<const Spot> hops() const noexcept { return hops_; }
    const FrequencyPlan& plan() const noexcept { return plan_; }

    bool operator==(const HopSequence&) const = default;

private:
    std::vector<Spot> hops_;
    FrequencyPlan plan_;
};

/// Family size q and the prime start-phase spacing tau.
struct FamilyConfig {
    std::size_t q = 1;
    std::uint64_t tau = 2;
};

enum class SetKind { base, balanced };

std::string_view to_string(SetKind kind) noexcept;

/// Ordered family of equal-length hop sequences over one plan.
class SequenceSet {
public:
    SequenceSet(std::vector<HopSequence> members, SetKind kind);

    std::size_t size() const noexcept { return members_.size(); }
    std::size_t length() const noexcept { return members_.front().size(); }
    const FrequencyPlan& plan() const noexcept { return members_.front().plan(); }
    SetKind kind() const noexcept { return kind_; }

    const HopSequence& operator[](std::size_t index) const noexcept { return members_[index]; }
    std::span<const HopSequence> members() const noexcept { return members_; }

    bool operator==(const SequenceSet&) const = default;

private:
    std::vector<HopSequence> members_;
    SetKind kind_;
};

/// Throws FamilySizeError unless 1 <= q <= M.
void validate_family(std::size_t q, const FrequencyPlan& plan);

/// Validates q against the plan and tau (prime, tau < n).
FamilyConfig make_family(std::size_t q, std::uint64_t tau, std::uint64_t period, const FrequencyPlan& plan);

/// Smallest prime >= floor(n / q), or the largest prime below n when that
/// would reach n.
std::uint64_t default_tau(std::uint64_t period, std::size_t q);

/// Number of hops obtained from an m-sequence of period n: floor(n / b).
std::size_t hop_length(std::uint64_t period, const FrequencyPlan& plan);

/// l(j) = sum_i s(jb + i) p^i over the first floor(n/b) non-overlapping tuples.
HopSequence tuple_map(const MSequence& mseq, const FrequencyPlan& plan);

/// l^a(j) = sum_i s((a tau + jb + i) mod n) p^i.
HopSequence shifted_hop_sequence(const MSequence& mseq, std::size_t index, const FamilyConfig& family,
                                 const FrequencyPlan& plan);

SequenceSet build_base_set(const MSequence& mseq, const FamilyConfig& family, const FrequencyPlan& plan);

} // namespace cfbfhs
