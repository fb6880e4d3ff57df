#include "cfbfhs/error.hpp"
#include "cfbfhs/hop_mapping.hpp"

#include <doctest.h>

#include <algorithm>
#include <vector>

using namespace cfbfhs;

namespace {

MSequence raw_sequence(std::vector<Symbol> symbols, std::uint32_t p = 2)
{
    return MSequence(std::move(symbols), LfsrConfig{p, {}, {}});
}

std::vector<Spot> as_vector(const HopSequence& s)
{
    return {s.hops().begin(), s.hops().end()};
}

const MSequence& period7()
{
    static const MSequence m = generate_m_sequence(LfsrConfig{2, {1, 1, 0, 1}, {1, 0, 0}});
    return m;
}

} // namespace

TEST_CASE("frequency plan")
{
    const FrequencyPlan plan(2, 4);
    CHECK(plan.spots() == 16);
    CHECK(FrequencyPlan::from_spots(2, 64).tuple_width() == 6);
    CHECK(FrequencyPlan::from_spots(3, 27) == FrequencyPlan(3, 3));
    CHECK_THROWS_AS(FrequencyPlan::from_spots(2, 24), Error);
    CHECK_THROWS_AS(FrequencyPlan(4, 2), Error);
    CHECK_THROWS_AS(FrequencyPlan(2, 0), Error);
}

TEST_CASE("tuple_map uses little-endian base-p weights")
{
    const auto m = raw_sequence({1, 0, 1, 1, 0, 0, 1});
    const auto hops = tuple_map(m, FrequencyPlan(2, 2));
    CHECK(as_vector(hops) == std::vector<Spot>{1, 3, 0});

    CHECK(as_vector(tuple_map(period7(), FrequencyPlan(2, 2))) == std::vector<Spot>{1, 2, 2});
}

TEST_CASE("tuple_map with b = 1 is the identity")
{
    const auto hops = tuple_map(period7(), FrequencyPlan(2, 1));
    CHECK(std::equal(hops.hops().begin(), hops.hops().end(), period7().symbols().begin(),
                     period7().symbols().end()));
}

TEST_CASE("tuple_map discards the trailing n mod b symbols")
{
    const auto hops = tuple_map(period7(), FrequencyPlan(2, 3));
    CHECK(hops.size() == 2);
    CHECK(hop_length(16383, FrequencyPlan(2, 4)) == 4095);
    CHECK(hop_length(262143, FrequencyPlan(2, 6)) == 43690);
}

TEST_CASE("tuple_map errors")
{
    CHECK_THROWS_AS(tuple_map(period7(), FrequencyPlan(2, 7)), Error);
    CHECK_THROWS_AS(tuple_map(period7(), FrequencyPlan(3, 1)), Error);
    try {
        tuple_map(period7(), FrequencyPlan(2, 8));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::empty_sequence);
    }
}

TEST_CASE("shifted_hop_sequence")
{
    const FrequencyPlan plan(2, 2);
    const FamilyConfig family{2, 3};
    CHECK(shifted_hop_sequence(period7(), 0, family, plan) == tuple_map(period7(), plan));
    CHECK(as_vector(shifted_hop_sequence(period7(), 1, family, plan)) == std::vector<Spot>{1, 3, 1});
    CHECK_THROWS_AS(shifted_hop_sequence(period7(), 2, family, plan), Error);
}

TEST_CASE("family validation")
{
    const FrequencyPlan plan(2, 4);
    CHECK_NOTHROW(validate_family(16, plan));
    CHECK_NOTHROW(validate_family(1, plan));
    CHECK_THROWS_AS(validate_family(17, plan), FamilySizeError);
    CHECK_THROWS_AS(validate_family(0, plan), FamilySizeError);
    try {
        validate_family(17, plan);
    } catch (const FamilySizeError& e) {
        CHECK(e.q() == 17);
        CHECK(e.spots() == 16);
        CHECK(e.kind() == ErrorKind::family_size);
    }

    CHECK(make_family(5, 3271, 16383, plan).tau == 3271);
    CHECK_THROWS_AS(make_family(5, 3270, 16383, plan), Error);   // not prime
    CHECK_THROWS_AS(make_family(5, 16411, 16383, plan), Error);  // >= n
}

TEST_CASE("default tau is the smallest prime at or above n / q")
{
    CHECK(default_tau(16383, 5) == 3299);  // 3276 -> 3299
    CHECK(default_tau(16383, 16) == 1031); // 1023 -> 1031
    CHECK(default_tau(16383, 2) == 8191);
    // floor(n / 1) = n is not below n: fall back to the largest prime below n
    CHECK(default_tau(16383, 1) == 16381);
    CHECK(default_tau(7, 1) == 5);
}

TEST_CASE("build_base_set")
{
    const MSequence m = generate_m_sequence(default_lfsr_config(2, 14));
    const FrequencyPlan plan(2, 4);

    const auto single = build_base_set(m, FamilyConfig{1, 3}, plan);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == tuple_map(m, plan));
    CHECK(single.kind() == SetKind::base);

    const auto set = build_base_set(m, FamilyConfig{5, default_tau(m.period(), 5)}, plan);
    REQUIRE(set.size() == 5);
    for (const auto& member : set.members()) CHECK(member.size() == 4095);
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) CHECK_FALSE(set[a] == set[b]);
    }
    CHECK_THROWS_AS(build_base_set(m, FamilyConfig{17, 3}, plan), FamilySizeError);
}

TEST_CASE("length is independent of the member index")
{
    const MSequence m = generate_m_sequence(default_lfsr_config(2, 10));
    for (std::size_t b = 1; b <= 5; ++b) {
        const FrequencyPlan plan(2, b);
        const std::size_t q = plan.spots();
        const auto set = build_base_set(m, FamilyConfig{q, default_tau(m.period(), q)}, plan);
        for (const auto& member : set.members()) CHECK(member.size() == m.period() / b);
    }
}

TEST_CASE("all spots occur in a long mapped sequence")
{
    const MSequence m = generate_m_sequence(default_lfsr_config(2, 12));
    for (std::size_t b = 1; b <= 6; ++b) {
        const FrequencyPlan plan(2, b);
        const auto hops = tuple_map(m, plan);
        REQUIRE(hops.size() >= 4 * plan.spots());
        std::vector<bool> seen(plan.spots(), false);
        for (Spot s : hops.hops()) seen[s] = true;
        CHECK(std::all_of(seen.begin(), seen.end(), [](bool v) { return v; }));
    }
}

TEST_CASE("sequence set invariants")
{
    const FrequencyPlan plan(2, 2);
    HopSequence a({0, 1, 2}, plan);
    HopSequence b({0, 1}, plan);
    HopSequence c({0, 1, 2}, FrequencyPlan(2, 3));
    CHECK_THROWS_AS(SequenceSet({a, b}, SetKind::base), Error);
    CHECK_THROWS_AS(SequenceSet({a, c}, SetKind::base), Error);
    CHECK_THROWS_AS(SequenceSet({}, SetKind::base), Error);
    CHECK_THROWS_AS(HopSequence({0, 4}, plan), Error);
    CHECK_THROWS_AS(HopSequence({}, plan), Error);
}
