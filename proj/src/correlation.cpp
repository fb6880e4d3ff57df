#include "cfbfhs/correlation.hpp"

#include "cfbfhs/error.hpp"
#include "parallel.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <utility>

namespace cfbfhs {

namespace {

using i128 = __int128;

i128 abs128(i128 v) noexcept { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) noexcept
{
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        const i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string128(i128 v)
{
    if (v == 0) return "0";
    std::string digits;
    const bool negative = v < 0;
    for (v = abs128(v); v > 0; v /= 10) digits.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
    if (negative) digits.push_back('-');
    return {digits.rbegin(), digits.rend()};
}

void require_same_length(const HopSequence& u, const HopSequence& v)
{
    if (u.size() != v.size()) {
        throw Error(ErrorKind::incompatible_sequence, "sequence lengths differ: " + std::to_string(u.size()) +
                                                          " vs " + std::to_string(v.size()));
    }
}

} // namespace

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
{
    if (denominator == 0) {
        throw Error(ErrorKind::division_by_zero, "rational with zero denominator");
    }
    i128 n = numerator;
    i128 d = denominator;
    if (d < 0) {
        n = -n;
        d = -d;
    }
    const i128 g = gcd128(n, d);
    num_ = static_cast<std::int64_t>(n / g);
    den_ = static_cast<std::int64_t>(d / g);
}

std::string Rational::to_decimal(int places) const
{
    i128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    const i128 magnitude = abs128(num_) * scale;
    i128 scaled = magnitude / den_;
    if (2 * (magnitude % den_) >= den_) ++scaled;

    std::string out = num_ < 0 && scaled != 0 ? "-" : "";
    out += to_string128(scaled / scale);
    if (places > 0) {
        std::string frac = to_string128(scaled % scale);
        out += '.';
        out.append(static_cast<std::size_t>(places) - frac.size(), '0');
        out += frac;
    }
    return out;
}

std::string Rational::to_fraction() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept
{
    return static_cast<i128>(a.num_) * b.den_ <=> static_cast<i128>(b.num_) * a.den_;
}

std::strong_ordering operator<=>(const Rational& a, std::int64_t b) noexcept
{
    return static_cast<i128>(a.num_) <=> static_cast<i128>(b) * a.den_;
}

std::size_t hamming_correlation(const HopSequence& u, const HopSequence& v, std::size_t delay)
{
    require_same_length(u, v);
    const std::size_t n = u.size();
    if (delay >= n) {
        throw Error(ErrorKind::invalid_argument,
                    "delay " + std::to_string(delay) + " outside [0, " + std::to_string(n) + ")");
    }
    std::size_t count = 0;
    std::size_t j = delay;
    for (std::size_t i = 0; i < n; ++i) {
        count += u[i] == v[j];
        if (++j == n) j = 0;
    }
    return count;
}

std::vector<std::size_t> hamming_profile(const HopSequence& u, const HopSequence& v)
{
    require_same_length(u, v);
    const std::size_t n = u.size();
    const std::size_t spots = std::max(u.plan().spots(), v.plan().spots());

    // Bucket v's positions by spot; each coincidence u(i) = v(j) contributes
    // to delay (j - i) mod n.
    std::vector<std::size_t> start(spots + 1, 0);
    for (Spot s : v.hops()) ++start[s + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<std::size_t> positions(n);
    {
        auto cursor = start;
        for (std::size_t j = 0; j < n; ++j) positions[cursor[v[j]]++] = j;
    }

    std::vector<std::size_t> values(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const Spot s = u[i];
        for (std::size_t k = start[s]; k < start[s + 1]; ++k) {
            const std::size_t j = positions[k];
            ++values[j >= i ? j - i : j + n - i];
        }
    }
    return values;
}

CorrelationProfile correlation_profile(const SequenceSet& set, std::size_t u, std::size_t v)
{
    if (u >= set.size() || v >= set.size()) {
        throw Error(ErrorKind::index_out_of_range, "profile pair (" + std::to_string(u) + ", " +
                                                       std::to_string(v) + ") outside a set of " +
                                                       std::to_string(set.size()));
    }
    return CorrelationProfile{u, v, u == v ? ProfileKind::autocorrelation : ProfileKind::crosscorrelation,
                              hamming_profile(set[u], set[v])};
}

Rational peng_fan_bound(std::uint64_t length, std::uint64_t q, std::uint64_t spots)
{
    if (length == 0 || q == 0 || spots == 0) {
        throw Error(ErrorKind::invalid_argument, "Peng-Fan bound needs positive n', q and M");
    }
    const i128 nq = static_cast<i128>(length) * q;
    if (nq == 1) {
        throw Error(ErrorKind::division_by_zero, "Peng-Fan bound undefined for n'q = 1");
    }
    i128 num = (nq - static_cast<i128>(spots)) * static_cast<i128>(length);
    i128 den = (nq - 1) * static_cast<i128>(spots);
    const i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    constexpr i128 limit = std::numeric_limits<std::int64_t>::max();
    if (abs128(num) > limit || den > limit) {
        throw Error(ErrorKind::invalid_argument, "Peng-Fan bound does not fit in 64-bit rational");
    }
    return Rational(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

std::vector<PairViolation> verify_orthogonality(const SequenceSet& set)
{
    std::vector<PairViolation> violations;
    for (std::size_t u = 0; u < set.size(); ++u) {
        for (std::size_t v = u + 1; v < set.size(); ++v) {
            const std::size_t hits = hamming_correlation(set[u], set[v], 0);
            if (hits != 0) violations.push_back({u, v, hits});
        }
    }
    return violations;
}

std::vector<std::size_t> frequency_histogram(const HopSequence& seq)
{
    std::vector<std::size_t> counts(seq.plan().spots(), 0);
    for (Spot s : seq.hops()) ++counts[s];
    return counts;
}

namespace {

long long no_hit_zone_from_cross(const std::vector<const CorrelationProfile*>& cross, std::size_t length)
{
    if (cross.empty()) return static_cast<long long>(length) - 1;
    for (const auto* profile : cross) {
        if (profile->values[0] != 0) return -1;
    }
    for (std::size_t z = 1; z < length; ++z) {
        for (const auto* profile : cross) {
            if (profile->values[z] != 0 || profile->values[length - z] != 0) {
                return static_cast<long long>(z) - 1;
            }
        }
    }
    return static_cast<long long>(length) - 1;
}

std::vector<CorrelationProfile> all_profiles(const SequenceSet& set, bool include_auto)
{
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < set.size(); ++u) {
        for (std::size_t v = include_auto ? u : u + 1; v < set.size(); ++v) pairs.emplace_back(u, v);
    }
    std::vector<CorrelationProfile> profiles(pairs.size());
    detail::parallel_for(pairs.size(), [&](std::size_t k) {
        profiles[k] = correlation_profile(set, pairs[k].first, pairs[k].second);
    });
    return profiles;
}

} // namespace

long long no_hit_zone_width(const SequenceSet& set)
{
    const auto profiles = all_profiles(set, false);
    std::vector<const CorrelationProfile*> cross;
    for (const auto& p : profiles) cross.push_back(&p);
    return no_hit_zone_from_cross(cross, set.length());
}

std::size_t max_hamming_correlation(const std::vector<CorrelationProfile>& profiles)
{
    std::size_t peak = 0;
    for (const auto& profile : profiles) {
        const std::size_t first = profile.kind == ProfileKind::autocorrelation ? 1 : 0;
        for (std::size_t d = first; d < profile.values.size(); ++d) peak = std::max(peak, profile.values[d]);
    }
    return peak;
}

AnalysisReport analyze_set(const SequenceSet& set)
{
    AnalysisReport report;
    report.profiles = all_profiles(set, true);

    std::vector<const CorrelationProfile*> cross;
    for (const auto& p : report.profiles) {
        if (p.kind == ProfileKind::crosscorrelation) cross.push_back(&p);
    }
    report.max_hamming = max_hamming_correlation(report.profiles);
    report.peng_fan = peng_fan_bound(set.length(), set.size(), set.plan().spots());
    report.no_hit_zone = no_hit_zone_from_cross(cross, set.length());
    for (const auto* p : cross) {
        if (p->values[0] != 0) report.violations.push_back({p->u, p->v, p->values[0]});
    }
    report.orthogonal_at_zero = report.violations.empty();
    for (const auto& member : set.members()) report.histograms.push_back(frequency_histogram(member));
    return report;
}

} // namespace cfbfhs
