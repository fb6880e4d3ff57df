#pragma once

#include "cfbfhs/hop_mapping.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cfbfhs {

/// Bookkeeping of a balancing run: how many entries of each sequence were
/// rewritten, and how often each sequence currently uses each spot.
class OperationLedger {
public:
    OperationLedger(std::size_t q, std::size_t spots);

    std::size_t family_size() const noexcept { return op_counts_.size(); }
    std::size_t spots() const noexcept { return spots_; }

    std::span<const std::size_t> op_counts() const noexcept { return op_counts_; }
    std::size_t op_count(std::size_t seq) const noexcept { return op_counts_[seq]; }

    std::size_t usage(std::size_t seq, Spot spot) const noexcept { return usage_[seq * spots_ + spot]; }
    std::span<const std::size_t> usage_row(std::size_t seq) const noexcept
    {
        return std::span<const std::size_t>(usage_).subspan(seq * spots_, spots_);
    }

    void record_initial(std::size_t seq, Spot spot) noexcept { ++usage_[seq * spots_ + spot]; }

    /// One replacement `from` -> `to` in sequence `seq`.
    void record_replacement(std::size_t seq, Spot from, Spot to) noexcept
    {
        --usage_[seq * spots_ + from];
        ++usage_[seq * spots_ + to];
        ++op_counts_[seq];
    }

    double mean_ops() const noexcept;

private:
    std::size_t spots_;
    std::vector<std::size_t> op_counts_;
    std::vector<std::size_t> usage_;
};

struct BalanceResult {
    SequenceSet balanced;
    OperationLedger ledger;
};

/// Rewrites colliding column entries of a base set so every column holds q
/// distinct spots.
///
/// Columns are visited left to right and, inside a column, collision groups
/// in ascending spot value. The most-operated member of a group keeps its
/// spot (ties: lower index keeps); the rest are rewritten in ascending
/// (op count, index) order. A rewritten entry takes the spot absent from the
/// column that this sequence has used least so far, lowest spot on ties.
BalanceResult cfb_balance(const SequenceSet& base);

} // namespace cfbfhs
