#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>

namespace senslab {

/// Largest k with k*k <= v.
inline std::uint64_t isqrt(std::uint64_t v) {
    if (v == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

/// Largest k with k*k*k <= v.
inline std::uint64_t icbrt(std::uint64_t v) {
    if (v == 0) return 0;
    auto r = static_cast<std::uint64_t>(std::cbrt(static_cast<double>(v)));
    while (r > 0 && r * r * r > v) --r;
    while ((r + 1) * (r + 1) * (r + 1) <= v) ++r;
    return r;
}

/// Uniform draw from [0, bound) by rejection sampling. Depends on the raw
/// engine output only, so sequences are identical across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return draw % bound;
}

/// Binomial coefficient clamped at `cap` (returns cap + 1 when larger).
/// The running value after step i is C(n-k+i, i), so the division is exact
/// and intermediate values stay below (cap + 1) * n.
inline std::uint64_t binomial_clamped(std::uint64_t n, std::uint64_t k,
                                      std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
        if (result > cap) return cap + 1;
    }
    return result;
}

inline void hash_combine(std::size_t& seed, std::uint64_t v) {
    seed ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) +
            (seed >> 2);
}

}  // namespace senslab
