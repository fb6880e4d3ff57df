#include "cfbfhs/balancer.hpp"
#include "cfbfhs/error.hpp"
#include "cfbfhs/fairness.hpp"

#include <doctest.h>

#include <vector>

using namespace cfbfhs;

TEST_CASE("fit_linear on exact data")
{
    const std::vector<double> xs{0, 1, 2, 3, 4};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(2 * x + 1);
    const auto fit = fit_linear(xs, ys);
    CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-12));

    const std::vector<double> flat{3.5, 3.5, 3.5, 3.5, 3.5};
    const auto constant = fit_linear(xs, flat);
    CHECK(constant.slope == doctest::Approx(0.0));
    CHECK(constant.intercept == doctest::Approx(3.5));
}

TEST_CASE("fit_linear three-point normal equations")
{
    const std::vector<double> xs{0, 1, 2};
    const std::vector<double> ys{0, 1, 1};
    const auto fit = fit_linear(xs, ys);
    CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fit.intercept == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
}

TEST_CASE("fit_linear degenerate input")
{
    const std::vector<double> same{2, 2, 2};
    const std::vector<double> ys{1, 2, 3};
    try {
        fit_linear(same, ys);
        FAIL("expected singular fit");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::singular_fit);
    }
    const std::vector<double> one{1};
    CHECK_THROWS_AS(fit_linear(one, one), Error);
    CHECK_THROWS_AS(fit_linear(same, one), Error);
}

TEST_CASE("mean operation curve bookkeeping")
{
    const MSequence m = generate_m_sequence(default_lfsr_config(2, 10));
    const FrequencyPlan plan(2, 3);
    const auto report = mean_operation_curve(m, plan);
    REQUIRE(report.points.size() == plan.spots());

    double peak = 0;
    for (std::size_t k = 0; k < report.points.size(); ++k) {
        const auto& point = report.points[k];
        CHECK(point.q == k + 1);
        REQUIRE(point.per_sequence_ops.size() == point.q);
        double sum = 0;
        for (auto d : point.per_sequence_ops) sum += static_cast<double>(d);
        CHECK(point.mean_ops == doctest::Approx(sum / static_cast<double>(point.q)));
        CHECK(point.normalized >= 0.0);
        CHECK(point.normalized <= 1.0);
        peak = std::max(peak, point.normalized);

        const auto family = make_family(point.q, point.tau, m.period(), plan);
        const auto rerun = cfb_balance(build_base_set(m, family, plan));
        CHECK(rerun.ledger.mean_ops() == point.mean_ops);
    }
    CHECK(peak == 1.0);
    CHECK(report.points.front().mean_ops == 0.0);

    std::vector<double> xs, ys;
    for (const auto& p : report.points) {
        xs.push_back(static_cast<double>(p.q));
        ys.push_back(p.normalized);
    }
    const auto fit = fit_linear(xs, ys);
    CHECK(report.fit.slope == fit.slope);
    CHECK(report.fit.intercept == fit.intercept);
}

TEST_CASE("fixed tau is used for every q")
{
    const MSequence m = generate_m_sequence(default_lfsr_config(2, 8));
    const auto report = mean_operation_curve(m, FrequencyPlan(2, 2), 7);
    for (const auto& p : report.points) CHECK(p.tau == 7);
}

TEST_CASE("slope tracks 1/M")
{
    const MSequence m = generate_m_sequence(default_lfsr_config(2, 14));
    for (std::size_t b : {4u, 5u, 6u}) {
        const FrequencyPlan plan(2, b);
        const auto report = mean_operation_curve(m, plan);
        const double scaled = report.fit.slope * static_cast<double>(plan.spots());
        CAPTURE(b);
        CHECK(scaled >= 0.85);
        CHECK(scaled <= 1.25);
    }
}
