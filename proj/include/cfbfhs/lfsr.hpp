#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace cfbfhs {

using Symbol = std::uint32_t;

/// Coefficients c_0..c_l of a polynomial over GF(p), lowest degree first.
using Polynomial = std::vector<Symbol>;

struct LfsrConfig {
    std::uint32_t p = 2;
    Polynomial taps;           // c_0..c_l, c_l != 0
    std::vector<Symbol> seed;  // s(0)..s(l-1)

    std::size_t degree() const noexcept { return taps.empty() ? 0 : taps.size() - 1; }

    bool operator==(const LfsrConfig&) const = default;
};

/// One full period of a maximal-length sequence over GF(p).
class MSequence {
public:
    MSequence(std::vector<Symbol> symbols, LfsrConfig origin);

    std::size_t period() const noexcept { return symbols_.size(); }
    std::uint32_t modulus() const noexcept { return origin_.p; }
    std::span<const Symbol> symbols() const noexcept { return symbols_; }
    const LfsrConfig& origin() const noexcept { return origin_; }

    /// Cyclic access, index taken mod the period.
    Symbol operator[](std::size_t index) const noexcept { return symbols_[index % symbols_.size()]; }

    bool operator==(const MSequence&) const = default;

private:
    std::vector<Symbol> symbols_;
    LfsrConfig origin_;
};

bool is_prime(std::uint64_t value) noexcept;

/// p^l - 1, throwing when it does not fit in 62 bits.
std::uint64_t maximal_period(std::uint32_t p, std::size_t degree);

/// True iff the LFSR with characteristic polynomial `taps` has a single state
/// cycle of length p^l - 1. Small periods are checked by walking the state
/// cycle, large ones by the order of x modulo the polynomial.
bool validate_primitive_polynomial(std::uint32_t p, std::span<const Symbol> taps);

/// Fibonacci LFSR, s(t) = -(c_0 s(t-l) + ... + c_{l-1} s(t-1)) / c_l mod p.
/// The first emitted symbol is seed[0].
MSequence generate_m_sequence(const LfsrConfig& cfg);

/// Built-in primitive polynomial for p = 2, 3 <= l <= 18.
Polynomial default_polynomial(std::uint32_t p, std::size_t degree);

/// Default polynomial with seed (1, 0, ..., 0).
LfsrConfig default_lfsr_config(std::uint32_t p, std::size_t degree);

namespace detail {

bool primitive_by_state_walk(std::uint32_t p, std::span<const Symbol> taps);
bool primitive_by_order(std::uint32_t p, std::span<const Symbol> taps);
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t value);

} // namespace detail

} // namespace cfbfhs
