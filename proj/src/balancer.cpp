#include "cfbfhs/balancer.hpp"

#include "cfbfhs/error.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace cfbfhs {

OperationLedger::OperationLedger(std::size_t q, std::size_t spots)
    : spots_(spots), op_counts_(q, 0), usage_(q * spots, 0)
{
}

double OperationLedger::mean_ops() const noexcept
{
    if (op_counts_.empty()) return 0.0;
    const auto total = std::accumulate(op_counts_.begin(), op_counts_.end(), std::size_t{0});
    return static_cast<double>(total) / static_cast<double>(op_counts_.size());
}

BalanceResult cfb_balance(const SequenceSet& base)
{
    if (base.kind() != SetKind::base) {
        throw Error(ErrorKind::invalid_argument, "cfb_balance expects a base set");
    }
    const FrequencyPlan plan = base.plan();
    const std::size_t q = base.size();
    const std::size_t spots = plan.spots();
    const std::size_t length = base.length();
    validate_family(q, plan);

    std::vector<std::vector<Spot>> rows;
    rows.reserve(q);
    OperationLedger ledger(q, spots);
    for (std::size_t a = 0; a < q; ++a) {
        const auto hops = base[a].hops();
        rows.emplace_back(hops.begin(), hops.end());
        for (Spot s : hops) ledger.record_initial(a, s);
    }

    // occupancy[f] = number of members on spot f in the current column
    std::vector<std::size_t> occupancy(spots, 0);
    std::vector<Spot> colliding;
    std::vector<std::size_t> group;

    for (std::size_t i = 0; i < length; ++i) {
        colliding.clear();
        for (std::size_t a = 0; a < q; ++a) {
            if (++occupancy[rows[a][i]] == 2) colliding.push_back(rows[a][i]);
        }
        std::sort(colliding.begin(), colliding.end());

        for (Spot spot : colliding) {
            group.clear();
            for (std::size_t a = 0; a < q; ++a) {
                if (rows[a][i] == spot) group.push_back(a);
            }
            // Ascending (op count, index); max_element picks the first
            // maximum, i.e. the lowest index among the most-operated.
            std::stable_sort(group.begin(), group.end(), [&](std::size_t x, std::size_t y) {
                return ledger.op_count(x) < ledger.op_count(y);
            });
            const auto keeper = std::max_element(group.begin(), group.end(), [&](std::size_t x, std::size_t y) {
                return ledger.op_count(x) < ledger.op_count(y);
            });
            const std::size_t keep = *keeper;
            for (std::size_t a : group) {
                if (a == keep) continue;
                Spot best = 0;
                std::size_t best_usage = static_cast<std::size_t>(-1);
                for (Spot f = 0; f < spots; ++f) {
                    if (occupancy[f] != 0) continue;
                    const std::size_t u = ledger.usage(a, f);
                    if (u < best_usage) {
                        best_usage = u;
                        best = f;
                    }
                }
                --occupancy[spot];
                ++occupancy[best];
                ledger.record_replacement(a, spot, best);
                rows[a][i] = best;
            }
        }

        for (std::size_t a = 0; a < q; ++a) occupancy[rows[a][i]] = 0;
    }

    std::vector<HopSequence> members;
    members.reserve(q);
    for (auto& row : rows) members.emplace_back(std::move(row), plan);
    return BalanceResult{SequenceSet(std::move(members), SetKind::balanced), std::move(ledger)};
}

} // namespace cfbfhs
