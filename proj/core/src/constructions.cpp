#include "senslab/constructions.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

#include "senslab/errors.hpp"
#include "senslab/group.hpp"
#include "senslab/util.hpp"

namespace senslab {

namespace {

void check_window_params(std::size_t n, std::size_t k) {
    if (k < 8) throw invalid_parameter("k >= 8 required");
    if (k * k > n) throw invalid_parameter("k^2 <= n required");
}

std::vector<std::pair<std::size_t, bool>> pattern_entries(std::size_t k) {
    std::vector<std::pair<std::size_t, bool>> entries;
    entries.reserve(6 * k - 2);
    // Block 1: 1 1 0^(k-2), fully determined.
    entries.emplace_back(1, true);
    entries.emplace_back(2, true);
    for (std::size_t pos = 3; pos <= k; ++pos) entries.emplace_back(pos, false);
    // Blocks 2..k: first five positions are 1.
    for (std::size_t j = 2; j <= k; ++j) {
        const std::size_t base = (j - 1) * k;
        for (std::size_t t = 1; t <= 5; ++t) entries.emplace_back(base + t, true);
    }
    // Block k: last three positions are 1 as well.
    const std::size_t end = k * k;
    for (std::size_t pos = end - 2; pos <= end; ++pos) {
        entries.emplace_back(pos, true);
    }
    return entries;
}

/// Ones of the window pattern, shifted to start at `offset` (0-based).
std::vector<std::size_t> pattern_ones_at(std::size_t k, std::size_t offset,
                                         bool clear_second_bit) {
    std::vector<std::size_t> ones;
    for (const auto& [pos, value] : pattern_entries(k)) {
        if (!value) continue;
        if (clear_second_bit && pos == 2) continue;
        ones.push_back(offset + pos);
    }
    return ones;
}

}  // namespace

PatternSpec block_pattern(std::size_t k) {
    if (k < 8) throw invalid_parameter("k >= 8 required");
    const auto entries = pattern_entries(k);
    return PatternSpec{k, PartialAssignment(k * k, entries)};
}

PatternMatcher::PatternMatcher(PartialAssignment pattern)
    : pattern_(std::move(pattern)) {
    const std::size_t n = pattern_.ambient_size();
    if (n <= 63) {
        for (const auto& [pos, value] : pattern_.entries()) {
            const std::uint64_t bit = std::uint64_t{1} << (n - pos);
            support_mask_ |= bit;
            if (value) value_mask_ |= bit;
        }
    }
}

bool PatternMatcher::evaluate(const Word& x) const {
    return extends(pattern_, x);
}

bool PatternMatcher::evaluate_index(std::uint64_t index) const {
    if (arity() <= 63) return (index & support_mask_) == value_mask_;
    return BooleanFunction::evaluate_index(index);
}

std::pair<PatternMatcher, PatternSpec> auxiliary_g(std::size_t k) {
    PatternSpec spec = block_pattern(k);
    return {PatternMatcher(spec.fixed), std::move(spec)};
}

OrbitPattern new_function(std::size_t n, std::size_t k) {
    check_window_params(n, k);
    PartialAssignment pattern(n, pattern_entries(k));
    return minterm_closure(pattern, cyclic_group(n), n);
}

OrbitPattern theorem31_function(std::size_t n) {
    if (n < 512) throw invalid_parameter("n >= 512 required");
    const std::size_t k = std::max<std::size_t>(8, icbrt(n));
    return new_function(n, k);
}

OrbitPattern theorem32_function(std::size_t n) {
    if (n < 64) throw invalid_parameter("n >= 64 required");
    return new_function(n, isqrt(n));
}

Word witness_one(std::size_t n, std::size_t k) {
    check_window_params(n, k);
    return Word::from_support(n, pattern_ones_at(k, 0, false));
}

ZeroWitness witness_zero(std::size_t n, std::size_t k) {
    check_window_params(n, k);
    const std::size_t window = k * k;
    const std::size_t copies = n / window;
    std::vector<std::size_t> ones;
    std::vector<std::size_t> sensitive;
    for (std::size_t j = 0; j < copies; ++j) {
        const auto copy = pattern_ones_at(k, j * window, true);
        ones.insert(ones.end(), copy.begin(), copy.end());
        sensitive.push_back(j * window + 2);
    }
    return ZeroWitness{Word::from_support(n, ones), std::move(sensitive)};
}

RubinsteinCyclic::RubinsteinCyclic(std::size_t k) : k_(k), n_(k * k) {
    if (k < 2) throw invalid_parameter("k >= 2 required");
}

bool RubinsteinCyclic::evaluate(const Word& x) const {
    if (x.size() != n_) {
        throw invalid_parameter("arity mismatch: function on " +
                                std::to_string(n_) + " bits, word of " +
                                std::to_string(x.size()));
    }
    for (std::size_t shift = 0; shift < n_; ++shift) {
        for (std::size_t block = 0; block < k_; ++block) {
            // Block `block` of the shifted word, read off the original.
            std::size_t ones = 0;
            std::size_t first = 0;
            std::size_t last = 0;
            for (std::size_t t = 1; t <= k_ && ones <= 2; ++t) {
                std::size_t pos = block * k_ + t + shift;
                while (pos > n_) pos -= n_;
                if (x.bit(pos)) {
                    ++ones;
                    if (ones == 1) first = t;
                    last = t;
                }
            }
            if (ones == 2 && last == first + 1) return true;
        }
    }
    return false;
}

bool RubinsteinCyclic::evaluate_index(std::uint64_t index) const {
    if (n_ > 64) return BooleanFunction::evaluate_index(index);
    const std::uint64_t full =
        n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    const std::uint64_t block_mask = (std::uint64_t{1} << k_) - 1;
    std::uint64_t rotated = index & full;
    for (std::size_t shift = 0; shift < n_; ++shift) {
        for (std::size_t block = 0; block < k_; ++block) {
            const std::uint64_t v =
                (rotated >> (n_ - (block + 1) * k_)) & block_mask;
            if (std::popcount(v) == 2 && (v & (v >> 1)) != 0) return true;
        }
        // One-step cyclic shift within n_ bits.
        rotated = ((rotated << 1) | (rotated >> (n_ - 1))) & full;
    }
    return false;
}

RubinsteinCyclic rubinstein_cyclic(std::size_t k) { return RubinsteinCyclic(k); }

OrbitPattern random_minterm_transitive(std::size_t n, std::size_t k,
                                       std::uint64_t seed) {
    if (k < 1 || k > n) throw invalid_parameter("1 <= k <= n required");
    std::mt19937_64 rng(seed);

    // Uniform support of size k via a partial shuffle.
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), std::size_t{1});
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_below(rng, n - i);
        std::swap(positions[i], positions[j]);
    }
    std::vector<std::size_t> support(positions.begin(), positions.begin() + k);
    std::sort(support.begin(), support.end());

    std::vector<std::pair<std::size_t, bool>> entries;
    for (std::size_t pos : support) {
        entries.emplace_back(pos, uniform_below(rng, 2) == 1);
    }
    PartialAssignment pattern(n, entries);

    std::vector<Permutation> generators;
    generators.push_back(Permutation::full_cycle(n));

    const bool want_extra = n >= 4 && uniform_below(rng, 2) == 1;
    if (want_extra) {
        // One random product of disjoint transpositions.
        std::vector<std::size_t> points(n);
        std::iota(points.begin(), points.end(), std::size_t{1});
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const std::size_t j = i + uniform_below(rng, n - i);
            std::swap(points[i], points[j]);
        }
        const std::size_t pairs = 1 + uniform_below(rng, n / 2);
        std::vector<std::size_t> image(n);
        std::iota(image.begin(), image.end(), std::size_t{1});
        for (std::size_t t = 0; t < pairs; ++t) {
            const std::size_t a = points[2 * t];
            const std::size_t b = points[2 * t + 1];
            image[a - 1] = b;
            image[b - 1] = a;
        }

        // Keep the extra generator only when the orbit provably stays small:
        // even if the augmented group were all of S_n, the orbit is at most
        // C(n, k) * C(k, weight) assignments.
        const std::uint64_t cap = 200'000;
        const std::uint64_t supports = binomial_clamped(n, k, cap);
        const std::uint64_t values_per =
            binomial_clamped(k, pattern.weight(), cap);
        if (supports <= cap && values_per <= cap &&
            supports * values_per <= cap) {
            generators.emplace_back(std::move(image));
        }
    }

    return minterm_closure(pattern, GeneratedGroup(n, std::move(generators)), n);
}

}  // namespace senslab
