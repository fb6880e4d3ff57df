#include "cfbfhs/fairness.hpp"

#include "cfbfhs/balancer.hpp"
#include "cfbfhs/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <string>

namespace cfbfhs {

LineFit fit_linear(std::span<const double> xs, std::span<const double> ys)
{
    if (xs.size() != ys.size()) {
        throw Error(ErrorKind::invalid_argument, "fit_linear: " + std::to_string(xs.size()) + " x values but " +
                                                     std::to_string(ys.size()) + " y values");
    }
    if (xs.size() < 2) {
        throw Error(ErrorKind::singular_fit, "fit_linear needs at least two points");
    }
    const auto count = static_cast<long double>(xs.size());
    long double mean_x = 0;
    long double mean_y = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= count;
    mean_y /= count;

    long double sxx = 0;
    long double sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const long double dx = xs[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (ys[i] - mean_y);
    }
    if (sxx == 0) {
        throw Error(ErrorKind::singular_fit, "fit_linear: all x values are equal");
    }
    const long double slope = sxy / sxx;
    return LineFit{static_cast<double>(slope), static_cast<double>(mean_y - slope * mean_x)};
}

FairnessReport mean_operation_curve(const MSequence& mseq, const FrequencyPlan& plan,
                                    std::optional<std::uint64_t> tau)
{
    const std::size_t spots = plan.spots();
    FairnessReport report;
    report.points.resize(spots);

    detail::parallel_for(spots, [&](std::size_t k) {
        const std::size_t q = k + 1;
        const std::uint64_t shift = tau ? *tau : default_tau(mseq.period(), q);
        const auto family = make_family(q, shift, mseq.period(), plan);
        const auto result = cfb_balance(build_base_set(mseq, family, plan));
        auto& point = report.points[k];
        point.q = q;
        point.tau = shift;
        const auto ops = result.ledger.op_counts();
        point.per_sequence_ops.assign(ops.begin(), ops.end());
        point.mean_ops = result.ledger.mean_ops();
    });

    double peak = 0.0;
    for (const auto& point : report.points) peak = std::max(peak, point.mean_ops);
    std::vector<double> xs;
    std::vector<double> ys;
    for (auto& point : report.points) {
        point.normalized = peak > 0.0 ? point.mean_ops / peak : 0.0;
        xs.push_back(static_cast<double>(point.q));
        ys.push_back(point.normalized);
    }
    if (xs.size() >= 2) report.fit = fit_linear(xs, ys);
    return report;
}

} // namespace cfbfhs
