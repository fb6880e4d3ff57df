#include "cfbfhs/fhma_sim.hpp"

#include "cfbfhs/error.hpp"

#include <string>

namespace cfbfhs {

CollisionReport simulate(const SimScenario& scenario)
{
    const SequenceSet& set = scenario.set;
    const std::size_t users = set.size();
    if (scenario.hops < 1) {
        throw Error(ErrorKind::invalid_argument, "simulation needs at least one hop");
    }
    if (!scenario.offsets.empty() && scenario.offsets.size() != users) {
        throw Error(ErrorKind::invalid_argument, "expected " + std::to_string(users) + " offsets, got " +
                                                     std::to_string(scenario.offsets.size()));
    }
    for (std::size_t u = 0; u < scenario.offsets.size(); ++u) {
        const double offset = scenario.offsets[u];
        if (!(offset >= 0.0 && offset < 1.0)) {
            throw Error(ErrorKind::unsupported_delay, "offset of user " + std::to_string(u) + " = " +
                                                          std::to_string(offset) +
                                                          " is outside one dwell time [0, 1)");
        }
    }

    CollisionReport report;
    report.users = users;
    report.hops = scenario.hops;
    report.per_pair.assign(users, std::vector<std::size_t>(users, 0));

    const std::size_t length = set.length();
    for (std::size_t t = 0; t < scenario.hops; ++t) {
        const std::size_t slot = t % length;
        for (std::size_t u = 0; u < users; ++u) {
            const Spot spot = set[u][slot];
            for (std::size_t v = u + 1; v < users; ++v) {
                if (set[v][slot] == spot) {
                    ++report.per_pair[u][v];
                    ++report.per_pair[v][u];
                    ++report.total_collisions;
                }
            }
        }
    }
    const std::size_t pairs = users * (users - 1) / 2;
    report.collision_rate =
        pairs == 0 ? 0.0 : static_cast<double>(report.total_collisions) / static_cast<double>(scenario.hops * pairs);
    return report;
}

std::pair<CollisionReport, CollisionReport> compare_sets(const SequenceSet& base, const SequenceSet& balanced,
                                                         std::size_t hops, std::vector<double> offsets)
{
    if (base.size() != balanced.size() || base.length() != balanced.length() || !(base.plan() == balanced.plan())) {
        throw Error(ErrorKind::incompatible_set, "compared sets differ in family size, length or frequency plan");
    }
    auto first = simulate(SimScenario{base, hops, offsets});
    auto second = simulate(SimScenario{balanced, hops, std::move(offsets)});
    return {std::move(first), std::move(second)};
}

} // namespace cfbfhs
