#include "cfbfhs/balancer.hpp"
#include "cfbfhs/error.hpp"
#include "cfbfhs/sequence_io.hpp"

#include <doctest.h>

#include <filesystem>
#include <random>
#include <string>

using namespace cfbfhs;

namespace {

std::pair<std::size_t, std::size_t> parse_failure(std::string_view text)
{
    try {
        parse_sequence_set(text, "t.seq");
    } catch (const ParseError& e) {
        return {e.line(), e.column()};
    }
    FAIL("expected a parse error");
    return {0, 0};
}

} // namespace

TEST_CASE("sequence file format")
{
    const FrequencyPlan plan(2, 2);
    const SequenceSet set({HopSequence({0, 1, 3}, plan), HopSequence({2, 2, 0}, plan)}, SetKind::base);
    CHECK(format_sequence_set(set) == "# M=4 n=3 q=2 kind=base\n0,1,3\n2,2,0\n");
}

TEST_CASE("format and parse round-trip on generated sets")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t degree = 6 + rng() % 6;
        const std::size_t b = 1 + rng() % 4;
        const MSequence m = generate_m_sequence(default_lfsr_config(2, degree));
        const FrequencyPlan plan(2, b);
        const std::size_t q = 1 + rng() % plan.spots();
        const auto base = build_base_set(m, FamilyConfig{q, default_tau(m.period(), q)}, plan);
        const auto balanced = cfb_balance(base).balanced;
        CHECK(parse_sequence_set(format_sequence_set(base)) == base);
        CHECK(parse_sequence_set(format_sequence_set(balanced)) == balanced);
    }
    const FrequencyPlan ternary(3, 2);
    const SequenceSet set({HopSequence({8, 0, 4}, ternary)}, SetKind::balanced);
    CHECK(parse_sequence_set(format_sequence_set(set)) == set);
}

TEST_CASE("parse tolerates CRLF and a trailing blank line")
{
    const auto set = parse_sequence_set("# M=4 n=2 q=1 kind=balanced\r\n3,1\r\n\r\n");
    CHECK(set.size() == 1);
    CHECK(set.kind() == SetKind::balanced);
    CHECK(set[0][0] == 3);
}

TEST_CASE("parse errors name line and column")
{
    CHECK(parse_failure("") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(parse_failure("M=4 n=2 q=1 kind=base\n0,1\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(parse_failure("# M=4 n=2 q=1 kind=odd\n0,1\n") == std::pair<std::size_t, std::size_t>{1, 20});
    CHECK(parse_failure("# M=6 n=2 q=1 kind=base\n0,1\n") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(parse_failure("# M=4 n=2 q=1\n0,1\n") == std::pair<std::size_t, std::size_t>{1, 14});
    CHECK(parse_failure("# M=4 n=2 q=1 kind=base size=3\n0,1\n") == std::pair<std::size_t, std::size_t>{1, 25});
    CHECK(parse_failure("# M=4 n=3 q=1 kind=base\n0,x,1\n") == std::pair<std::size_t, std::size_t>{2, 3});
    CHECK(parse_failure("# M=4 n=3 q=1 kind=base\n0,1,4\n") == std::pair<std::size_t, std::size_t>{2, 5});
    CHECK(parse_failure("# M=4 n=3 q=1 kind=base\n0,1\n") == std::pair<std::size_t, std::size_t>{2, 4});
    CHECK(parse_failure("# M=4 n=2 q=2 kind=base\n0,1\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(parse_failure("# M=4 n=2 q=1 kind=base\n0,1\n2,3\n") == std::pair<std::size_t, std::size_t>{3, 1});
    CHECK(parse_failure("# M=4 n=2 q=1 kind=base\n0,,1\n") == std::pair<std::size_t, std::size_t>{2, 3});
}

TEST_CASE("polynomial lists")
{
    CHECK(parse_polynomial("1,1,0,1") == Polynomial{1, 1, 0, 1});
    CHECK(parse_polynomial(" 1, 0 ,1") == Polynomial{1, 0, 1});
    CHECK_THROWS_AS(parse_polynomial("1,-1"), Error);
    CHECK_THROWS_AS(parse_polynomial(""), Error);
}

TEST_CASE("csv exports")
{
    const FrequencyPlan plan(2, 1);
    const SequenceSet base({HopSequence({1, 1}, plan), HopSequence({1, 0}, plan)}, SetKind::base);
    const auto result = cfb_balance(base);
    CHECK(ledger_ops_csv(result.ledger) == "seq_index,op_count\n0,0\n1,1\n");
    CHECK(ledger_usage_csv(result.ledger) == "seq_index,f_0,f_1\n0,0,2\n1,2,0\n");
    CHECK(histogram_csv({{2, 0}, {1, 1}}) == "seq_index,f_0,f_1\n0,2,0\n1,1,1\n");

    CorrelationProfile profile{0, 0, ProfileKind::autocorrelation, {2, 0}};
    CHECK(profile_csv(profile) == "delay,count\n0,2\n1,0\n");

    FairnessReport report;
    report.points.push_back({1, 2, {0}, 0.0, 0.0});
    report.points.push_back({2, 2, {0, 1}, 0.5, 1.0});
    report.fit = {1.0, -1.0};
    CHECK(fairness_csv(report) == "q,mean_ops,normalized\n1,0,0\n2,0.5,1\n# fit h1=1 h2=-1\n");

    CHECK(format_double(0.0605) == "0.0605");
    CHECK(format_double(1.0 / 3.0) == "0.3333333333333333");
}

TEST_CASE("atomic write and read back")
{
    const auto dir = std::filesystem::temp_directory_path() / "cfbfhs_io_test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "nested" / "x.seq";
    write_file_atomic(path, "# M=2 n=1 q=1 kind=base\n1\n");
    CHECK(read_text_file(path) == "# M=2 n=1 q=1 kind=base\n1\n");
    CHECK_FALSE(std::filesystem::exists(dir / "nested" / "x.seq.tmp"));
    CHECK(read_sequence_file(path).size() == 1);
    write_file_atomic(path, "replaced");
    CHECK(read_text_file(path) == "replaced");
    std::filesystem::remove_all(dir);

    try {
        read_text_file(dir / "missing.seq");
        FAIL("expected io error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::io);
    }
}
