#include "cfbfhs/hop_mapping.hpp"

#include "cfbfhs/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace cfbfhs {

namespace {

constexpr std::size_t max_spots = std::size_t{1} << 24;

} // namespace

FrequencyPlan::FrequencyPlan(std::uint32_t p, std::size_t tuple_width) : p_(p), b_(tuple_width), spots_(1)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::invalid_argument, "p=" + std::to_string(p) + " is not prime");
    }
    if (tuple_width == 0) {
        throw Error(ErrorKind::invalid_argument, "tuple width b must be positive");
    }
    for (std::size_t i = 0; i < tuple_width; ++i) {
        if (spots_ > max_spots / p) {
            throw Error(ErrorKind::invalid_argument, "M = p^b exceeds " + std::to_string(max_spots));
        }
        spots_ *= p;
    }
}

FrequencyPlan FrequencyPlan::from_spots(std::uint32_t p, std::size_t spots)
{
    if (!is_prime(p) || spots < p) {
        throw Error(ErrorKind::invalid_argument,
                    "M=" + std::to_string(spots) + " is not a positive power of p=" + std::to_string(p));
    }
    std::size_t b = 0;
    std::size_t m = spots;
    while (m % p == 0) {
        m /= p;
        ++b;
    }
    if (m != 1) {
        throw Error(ErrorKind::invalid_argument,
                    "M=" + std::to_string(spots) + " is not a power of p=" + std::to_string(p));
    }
    return FrequencyPlan(p, b);
}

HopSequence::HopSequence(std::vector<Spot> hops, FrequencyPlan plan) : hops_(std::move(hops)), plan_(plan)
{
    if (hops_.empty()) {
        throw Error(ErrorKind::empty_sequence, "hop sequence must be non-empty");
    }
    const auto bad = std::find_if(hops_.begin(), hops_.end(), [&](Spot s) { return s >= plan_.spots(); });
    if (bad != hops_.end()) {
        throw Error(ErrorKind::invalid_argument, "hop value " + std::to_string(*bad) + " at position " +
                                                     std::to_string(bad - hops_.begin()) + " is not below M=" +
                                                     std::to_string(plan_.spots()));
    }
}

std::string_view to_string(SetKind kind) noexcept
{
    return kind == SetKind::base ? "base" : "balanced";
}

SequenceSet::SequenceSet(std::vector<HopSequence> members, SetKind kind) : members_(std::move(members)), kind_(kind)
{
    if (members_.empty()) {
        throw Error(ErrorKind::incompatible_set, "sequence set must have at least one member");
    }
    for (std::size_t a = 1; a < members_.size(); ++a) {
        if (members_[a].size() != members_[0].size() || !(members_[a].plan() == members_[0].plan())) {
            throw Error(ErrorKind::incompatible_set,
                        "member " + std::to_string(a) + " differs in length or frequency plan from member 0");
        }
    }
}

void validate_family(std::size_t q, const FrequencyPlan& plan)
{
    if (q < 1 || q > plan.spots()) {
        throw FamilySizeError(static_cast<long long>(q), static_cast<long long>(plan.spots()));
    }
}

FamilyConfig make_family(std::size_t q, std::uint64_t tau, std::uint64_t period, const FrequencyPlan& plan)
{
    validate_family(q, plan);
    if (!is_prime(tau) || tau >= period) {
        throw Error(ErrorKind::invalid_argument,
                    "shift tau=" + std::to_string(tau) + " must be a prime below n=" + std::to_string(period));
    }
    return FamilyConfig{q, tau};
}

std::uint64_t default_tau(std::uint64_t period, std::size_t q)
{
    if (q == 0) {
        throw Error(ErrorKind::invalid_argument, "q must be positive");
    }
    std::uint64_t tau = period / q;
    while (!is_prime(tau)) ++tau;
    if (tau < period) return tau;
    for (tau = period; tau-- > 2;) {
        if (is_prime(tau)) return tau;
    }
    throw Error(ErrorKind::invalid_argument, "no prime shift below n=" + std::to_string(period));
}

std::size_t hop_length(std::uint64_t period, const FrequencyPlan& plan)
{
    if (plan.tuple_width() >= period) {
        throw Error(ErrorKind::empty_sequence, "tuple width b=" + std::to_string(plan.tuple_width()) +
                                                   " must be smaller than the period n=" + std::to_string(period));
    }
    return static_cast<std::size_t>(period / plan.tuple_width());
}

HopSequence tuple_map(const MSequence& mseq, const FrequencyPlan& plan)
{
    return shifted_hop_sequence(mseq, 0, FamilyConfig{1, 0}, plan);
}

HopSequence shifted_hop_sequence(const MSequence& mseq, std::size_t index, const FamilyConfig& family,
                                 const FrequencyPlan& plan)
{
    if (mseq.modulus() != plan.p()) {
        throw Error(ErrorKind::invalid_argument, "m-sequence modulus " + std::to_string(mseq.modulus()) +
                                                     " differs from plan p=" + std::to_string(plan.p()));
    }
    if (index >= family.q) {
        throw Error(ErrorKind::index_out_of_range,
                    "sequence index " + std::to_string(index) + " >= q=" + std::to_string(family.q));
    }
    const std::uint64_t n = mseq.period();
    const std::size_t length = hop_length(n, plan);
    const std::size_t b = plan.tuple_width();
    const auto symbols = mseq.symbols();
    const std::uint64_t offset = static_cast<std::uint64_t>((static_cast<unsigned __int128>(index) * family.tau) % n);

    std::vector<Spot> hops(length);
    std::uint64_t pos = offset;
    for (std::size_t j = 0; j < length; ++j) {
        Spot value = 0;
        Spot weight = 1;
        for (std::size_t i = 0; i < b; ++i) {
            value += symbols[pos] * weight;
            weight *= plan.p();
            if (++pos == n) pos = 0;
        }
        hops[j] = value;
    }
    return HopSequence(std::move(hops), plan);
}

SequenceSet build_base_set(const MSequence& mseq, const FamilyConfig& family, const FrequencyPlan& plan)
{
    validate_family(family.q, plan);
    std::vector<HopSequence> members;
    members.reserve(family.q);
    for (std::size_t a = 0; a < family.q; ++a) {
        members.push_back(shifted_hop_sequence(mseq, a, family, plan));
    }
    return SequenceSet(std::move(members), SetKind::base);
}

} // namespace cfbfhs
