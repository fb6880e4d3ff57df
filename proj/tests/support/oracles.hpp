#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// algorithms; the tests compare the two routes.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace oracle {

/// Multiplicative order of x in GF(p)[x]/(f) by repeated multiplication,
/// or 0 when x never returns to 1 within p^l steps (c_0 == 0).
inline std::uint64_t order_of_x(std::uint32_t p, const std::vector<std::uint32_t>& f)
{
    const std::size_t l = f.size() - 1;
    std::uint64_t lead_inv = 1;
    while ((lead_inv * f[l]) % p != 1) ++lead_inv;

    std::vector<std::uint64_t> cur(l, 0);
    cur[0] = 1;
    std::uint64_t limit = 1;
    for (std::size_t i = 0; i < l; ++i) limit *= p;
    for (std::uint64_t k = 1; k <= limit; ++k) {
        // cur *= x
        const std::uint64_t top = cur[l - 1];
        for (std::size_t i = l - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        // x^l = -(f_0 + ... + f_{l-1} x^{l-1}) / f_l
        for (std::size_t i = 0; i < l; ++i) {
            const std::uint64_t term = (top * f[i] % p) * lead_inv % p;
            cur[i] = (cur[i] + p - term) % p;
        }
        bool one = cur[0] == 1;
        for (std::size_t i = 1; i < l && one; ++i) one = cur[i] == 0;
        if (one) return k;
    }
    return 0;
}

/// Cycle length of a binary Fibonacci LFSR packed into a machine word.
inline std::uint64_t binary_state_cycle(const std::vector<std::uint32_t>& f)
{
    const std::size_t l = f.size() - 1;
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < l; ++i) {
        if (f[i]) mask |= std::uint64_t{1} << i;
    }
    const std::uint64_t start = 1;
    std::uint64_t state = start;  // bit i = s(t - l + i)
    for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t bit = static_cast<std::uint64_t>(__builtin_popcountll(state & mask) & 1);
        state = (state >> 1) | (bit << (l - 1));
        if (state == start) return k;
        if (k > (std::uint64_t{1} << l)) return 0;
    }
}

/// G_uv(d) by the defining double loop.
template <typename Seq>
std::vector<std::size_t> naive_profile(const Seq& u, const Seq& v)
{
    const std::size_t n = u.size();
    std::vector<std::size_t> out(n, 0);
    for (std::size_t d = 0; d < n; ++d) {
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == v[(i + d) % n]) ++out[d];
        }
    }
    return out;
}

template <typename Seq>
std::vector<std::size_t> naive_histogram(const Seq& s, std::size_t spots)
{
    std::vector<std::size_t> h(spots, 0);
    for (std::size_t i = 0; i < s.size(); ++i) ++h[s[i]];
    return h;
}

/// Occurrence count of every cyclic l-window of `symbols`, keyed by window.
inline std::map<std::vector<std::uint32_t>, std::size_t> cyclic_windows(const std::vector<std::uint32_t>& symbols,
                                                                        std::size_t l)
{
    std::map<std::vector<std::uint32_t>, std::size_t> counts;
    const std::size_t n = symbols.size();
    for (std::size_t t = 0; t < n; ++t) {
        std::vector<std::uint32_t> w(l);
        for (std::size_t i = 0; i < l; ++i) w[i] = symbols[(t + i) % n];
        ++counts[w];
    }
    return counts;
}

inline std::vector<std::uint32_t> random_hops(std::mt19937& rng, std::size_t length, std::size_t spots)
{
    std::uniform_int_distribution<std::uint32_t> dist(0, static_cast<std::uint32_t>(spots - 1));
    std::vector<std::uint32_t> out(length);
    for (auto& x : out) x = dist(rng);
    return out;
}

} // namespace oracle
