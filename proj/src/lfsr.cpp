#include "cfbfhs/lfsr.hpp"

#include "cfbfhs/error.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <string>
#include <utility>

namespace cfbfhs {

namespace {

constexpr std::uint64_t state_walk_limit = std::uint64_t{1} << 22;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept
{
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    // p is prime: a^(p-2)
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    for (std::uint64_t e = p - 2; e > 0; e >>= 1) {
        if (e & 1) result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
    }
    return result;
}

void check_polynomial(std::uint32_t p, std::span<const Symbol> taps)
{
    if (!is_prime(p)) {
        throw Error(ErrorKind::invalid_polynomial, "modulus p=" + std::to_string(p) + " is not prime");
    }
    if (taps.size() < 2) {
        throw Error(ErrorKind::invalid_polynomial, "polynomial must have degree >= 1");
    }
    if (taps.back() == 0) {
        throw Error(ErrorKind::invalid_polynomial, "leading coefficient must be non-zero");
    }
    for (auto c : taps) {
        if (c >= p) {
            throw Error(ErrorKind::invalid_polynomial,
                        "coefficient " + std::to_string(c) + " outside GF(" + std::to_string(p) + ")");
        }
    }
}

/// Feedback weights w_i = -c_i / c_l, so that s(t) = sum_i w_i s(t-l+i).
std::vector<std::uint64_t> feedback_weights(std::uint32_t p, std::span<const Symbol> taps)
{
    const std::size_t l = taps.size() - 1;
    const std::uint64_t lead_inv = inverse_mod(taps[l], p);
    std::vector<std::uint64_t> w(l);
    for (std::size_t i = 0; i < l; ++i) {
        w[i] = (p - mul_mod(taps[i], lead_inv, p)) % p;
    }
    return w;
}

// Polynomials modulo a monic f of degree l, coefficients lowest first, size l.
class QuotientRing {
public:
    QuotientRing(std::uint32_t p, std::span<const Symbol> taps) : p_(p), l_(taps.size() - 1)
    {
        // x^l = sum_i reduce_[i] x^i
        reduce_ = feedback_weights(p, taps);
    }

    std::vector<std::uint64_t> multiply(const std::vector<std::uint64_t>& a,
                                        const std::vector<std::uint64_t>& b) const
    {
        std::vector<std::uint64_t> prod(2 * l_ - 1, 0);
        for (std::size_t i = 0; i < l_; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < l_; ++j) {
                prod[i + j] = (prod[i + j] + mul_mod(a[i], b[j], p_)) % p_;
            }
        }
        for (std::size_t k = prod.size(); k-- > l_;) {
            const std::uint64_t top = prod[k];
            if (top == 0) continue;
            prod[k] = 0;
            for (std::size_t i = 0; i < l_; ++i) {
                prod[k - l_ + i] = (prod[k - l_ + i] + mul_mod(top, reduce_[i], p_)) % p_;
            }
        }
        prod.resize(l_);
        return prod;
    }

    std::vector<std::uint64_t> power_of_x(std::uint64_t exponent) const
    {
        std::vector<std::uint64_t> result(l_, 0);
        result[0] = 1;
        std::vector<std::uint64_t> base(l_, 0);
        if (l_ == 1) {
            base[0] = reduce_[0];
        } else {
            base[1] = 1;
        }
        for (; exponent > 0; exponent >>= 1) {
            if (exponent & 1) result = multiply(result, base);
            base = multiply(base, base);
        }
        return result;
    }

    bool is_one(const std::vector<std::uint64_t>& a) const
    {
        return a[0] == 1 && std::all_of(a.begin() + 1, a.end(), [](auto c) { return c == 0; });
    }

private:
    std::uint64_t p_;
    std::size_t l_;
    std::vector<std::uint64_t> reduce_;
};

struct TableEntry {
    std::size_t degree;
    std::array<unsigned, 4> exponents;  // non-zero middle terms, 0 = unused
};

// Primitive polynomials over GF(2): x^l + x^e... + 1.
constexpr std::array<TableEntry, 16> binary_table{{
    {3, {1, 0, 0, 0}},
    {4, {1, 0, 0, 0}},
    {5, {2, 0, 0, 0}},
    {6, {1, 0, 0, 0}},
    {7, {1, 0, 0, 0}},
    {8, {4, 3, 2, 0}},
    {9, {4, 0, 0, 0}},
    {10, {3, 0, 0, 0}},
    {11, {2, 0, 0, 0}},
    {12, {6, 4, 1, 0}},
    {13, {4, 3, 1, 0}},
    {14, {10, 6, 1, 0}},
    {15, {1, 0, 0, 0}},
    {16, {12, 3, 1, 0}},
    {17, {3, 0, 0, 0}},
    {18, {7, 0, 0, 0}},
}};

Polynomial table_polynomial(const TableEntry& entry)
{
    Polynomial taps(entry.degree + 1, 0);
    taps.front() = 1;
    taps.back() = 1;
    for (auto e : entry.exponents) {
        if (e != 0) taps[e] = 1;
    }
    return taps;
}

} // namespace

MSequence::MSequence(std::vector<Symbol> symbols, LfsrConfig origin)
    : symbols_(std::move(symbols)), origin_(std::move(origin))
{
}

bool is_prime(std::uint64_t value) noexcept
{
    if (value < 2) return false;
    if (value % 2 == 0) return value == 2;
    for (std::uint64_t d = 3; d <= value / d; d += 2) {
        if (value % d == 0) return false;
    }
    return true;
}

std::uint64_t maximal_period(std::uint32_t p, std::size_t degree)
{
    constexpr std::uint64_t cap = std::uint64_t{1} << 62;
    std::uint64_t power = 1;
    for (std::size_t i = 0; i < degree; ++i) {
        if (power > cap / p) {
            throw Error(ErrorKind::unsupported_degree,
                        "period " + std::to_string(p) + "^" + std::to_string(degree) + " - 1 is too large");
        }
        power *= p;
    }
    return power - 1;
}

namespace detail {

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t value)
{
    std::vector<std::uint64_t> factors;
    for (std::uint64_t d = 2; d <= value / d; ++d) {
        if (value % d != 0) continue;
        factors.push_back(d);
        while (value % d == 0) value /= d;
    }
    if (value > 1) factors.push_back(value);
    return factors;
}

bool primitive_by_state_walk(std::uint32_t p, std::span<const Symbol> taps)
{
    check_polynomial(p, taps);
    if (taps.front() == 0) return false;
    const std::size_t l = taps.size() - 1;
    const std::uint64_t period = maximal_period(p, l);
    const auto w = feedback_weights(p, taps);

    std::vector<std::uint64_t> state(l, 0);
    state[0] = 1;
    const auto start = state;
    for (std::uint64_t step = 1; step <= period; ++step) {
        std::uint64_t next = 0;
        for (std::size_t i = 0; i < l; ++i) {
            next = (next + mul_mod(w[i], state[i], p)) % p;
        }
        std::rotate(state.begin(), state.begin() + 1, state.end());
        state.back() = next;
        if (state == start) return step == period;
    }
    return false;
}

bool primitive_by_order(std::uint32_t p, std::span<const Symbol> taps)
{
    check_polynomial(p, taps);
    if (taps.front() == 0) return false;
    const std::uint64_t period = maximal_period(p, taps.size() - 1);
    const QuotientRing ring(p, taps);
    if (!ring.is_one(ring.power_of_x(period))) return false;
    for (auto r : distinct_prime_factors(period)) {
        if (ring.is_one(ring.power_of_x(period / r))) return false;
    }
    return true;
}

} // namespace detail

bool validate_primitive_polynomial(std::uint32_t p, std::span<const Symbol> taps)
{
    check_polynomial(p, taps);
    if (maximal_period(p, taps.size() - 1) <= state_walk_limit) {
        return detail::primitive_by_state_walk(p, taps);
    }
    return detail::primitive_by_order(p, taps);
}

MSequence generate_m_sequence(const LfsrConfig& cfg)
{
    if (!validate_primitive_polynomial(cfg.p, cfg.taps)) {
        throw Error(ErrorKind::invalid_polynomial, "polynomial is not primitive over GF(" + std::to_string(cfg.p) + ")");
    }
    const std::size_t l = cfg.degree();
    if (cfg.seed.size() != l) {
        throw Error(ErrorKind::degenerate_seed,
                    "seed has " + std::to_string(cfg.seed.size()) + " symbols, expected " + std::to_string(l));
    }
    if (std::any_of(cfg.seed.begin(), cfg.seed.end(), [&](Symbol s) { return s >= cfg.p; })) {
        throw Error(ErrorKind::degenerate_seed, "seed symbol outside GF(p)");
    }
    if (std::all_of(cfg.seed.begin(), cfg.seed.end(), [](Symbol s) { return s == 0; })) {
        throw Error(ErrorKind::degenerate_seed, "seed must not be all-zero");
    }

    const std::uint64_t period = maximal_period(cfg.p, l);
    const auto w = feedback_weights(cfg.p, cfg.taps);
    std::vector<std::pair<std::size_t, std::uint64_t>> active;
    for (std::size_t i = 0; i < l; ++i) {
        if (w[i] != 0) active.emplace_back(i, w[i]);
    }

    std::vector<Symbol> symbols(period);
    std::copy_n(cfg.seed.begin(), std::min<std::uint64_t>(l, period), symbols.begin());
    for (std::uint64_t t = l; t < period; ++t) {
        std::uint64_t next = 0;
        for (auto [i, weight] : active) {
            next += mul_mod(weight, symbols[t - l + i], cfg.p);
        }
        symbols[t] = static_cast<Symbol>(next % cfg.p);
    }
    return MSequence(std::move(symbols), cfg);
}

Polynomial default_polynomial(std::uint32_t p, std::size_t degree)
{
    static std::once_flag validated;
    std::call_once(validated, [] {
        for (const auto& entry : binary_table) {
            if (!validate_primitive_polynomial(2, table_polynomial(entry))) {
                throw Error(ErrorKind::invalid_polynomial,
                            "built-in polynomial of degree " + std::to_string(entry.degree) + " is not primitive");
            }
        }
    });
    if (p == 2) {
        for (const auto& entry : binary_table) {
            if (entry.degree == degree) return table_polynomial(entry);
        }
    }
    throw Error(ErrorKind::unsupported_degree,
                "no built-in polynomial for p=" + std::to_string(p) + ", l=" + std::to_string(degree) +
                    "; supply taps explicitly");
}

LfsrConfig default_lfsr_config(std::uint32_t p, std::size_t degree)
{
    LfsrConfig cfg;
    cfg.p = p;
    cfg.taps = default_polynomial(p, degree);
    cfg.seed.assign(degree, 0);
    cfg.seed.front() = 1;
    return cfg;
}

} // namespace cfbfhs
