#pragma once

#include "cfbfhs/hop_mapping.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace cfbfhs {

/// Frame-synchronised users hopping through one sequence set.
struct SimScenario {
    SequenceSet set;
    std::size_t hops = 1;
    /// Per-user delay as a fraction of the dwell time, each in [0, 1).
    /// Empty means all users aligned.
    std::vector<double> offsets;
};

struct CollisionReport {
    std::size_t users = 0;
    std::size_t hops = 0;
    std::size_t total_collisions = 0;
    /// users x users, symmetric with a zero diagonal.
    std::vector<std::vector<std::size_t>> per_pair;
    double collision_rate = 0.0;

    bool operator==(const CollisionReport&) const = default;
};

/// Counts, for every hop t < hops and every user pair, whether both users sit
/// on the same spot. Sub-dwell offsets do not move a user off its hop slot.
CollisionReport simulate(const SimScenario& scenario);

/// Same hops and offsets applied to two sets of identical shape.
std::pair<CollisionReport, CollisionReport> compare_sets(const SequenceSet& base, const SequenceSet& balanced,
                                                         std::size_t hops, std::vector<double> offsets = {});

} // namespace cfbfhs
