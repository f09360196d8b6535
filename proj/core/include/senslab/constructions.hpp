#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "senslab/boolean_function.hpp"
#include "senslab/orbit_pattern.hpp"
#include "senslab/partial_assignment.hpp"

namespace senslab {

/// The fixed positions of the k-block window pattern on k*k bits, k >= 8:
/// block 1 is pinned to 1 1 0...0, blocks 2..k pin their first five bits to
/// 1, and block k additionally pins its last three bits to 1. That fixes
/// exactly 6k - 2 positions, of which k - 2 carry 0, for a total weight of
/// 5k; all remaining positions are free.
struct PatternSpec {
    std::size_t block_size;    // k
    PartialAssignment fixed;   // on k*k bits

    std::size_t window_size() const { return block_size * block_size; }
};

PatternSpec block_pattern(std::size_t k);

/// Matches one fixed pattern in place: f(x) = 1 iff x extends the pattern.
/// The function ignores every position outside the pattern's support.
class PatternMatcher final : public BooleanFunction {
  public:
    explicit PatternMatcher(PartialAssignment pattern);

    std::size_t arity() const override { return pattern_.ambient_size(); }
    bool evaluate(const Word& x) const override;
    bool evaluate_index(std::uint64_t index) const override;

    const PartialAssignment& pattern() const { return pattern_; }

  private:
    PartialAssignment pattern_;
    std::uint64_t support_mask_ = 0;  // index space, valid when arity <= 63
    std::uint64_t value_mask_ = 0;
};

/// The window predicate on k*k bits: 1 iff the input matches every fixed
/// position of block_pattern(k). Requires k >= 8.
std::pair<PatternMatcher, PatternSpec> auxiliary_g(std::size_t k);

/// The cyclic closure of block_pattern(k) embedded in [1, n]: 1 iff the word,
/// laid on a cycle, contains a length-k^2 window matching the pattern.
/// Requires k >= 8 and k^2 <= n.
OrbitPattern new_function(std::size_t n, std::size_t k);

/// new_function with k = max(8, floor(n^(1/3))); requires n >= 512. The
/// block count balances the window-fixed positions against the number of
/// disjoint windows, giving both one-sided sensitivities the same order.
OrbitPattern theorem31_function(std::size_t n);

/// new_function with k = floor(sqrt(n)); requires n >= 64.
OrbitPattern theorem32_function(std::size_t n);

/// Word whose first k^2 bits realize the pattern with all free positions 0,
/// padded with zeros. The function value is 1 and the weight is exactly 5k.
Word witness_one(std::size_t n, std::size_t k);

/// Word built from m = floor(n / k^2) window copies, each with the second
/// bit of its first block cleared, padded with zeros. The function value is
/// 0, and flipping any listed position (the cleared bit of each copy) makes
/// it 1.
struct ZeroWitness {
    Word word;
    std::vector<std::size_t> sensitive_positions;  // {(j-1)k^2 + 2 : j <= m}
};

ZeroWitness witness_zero(std::size_t n, std::size_t k);

/// Two-level block construction on k^2 bits, k >= 2: a block of a word is
/// accepted when it holds exactly two adjacent ones and zeros elsewhere;
/// f'(y) ors the acceptance over the k fixed blocks, and f(x) = 1 iff f'
/// accepts some cyclic shift of x. Cyclically invariant by construction.
class RubinsteinCyclic final : public BooleanFunction {
  public:
    explicit RubinsteinCyclic(std::size_t k);

    std::size_t arity() const override { return n_; }
    std::size_t group_size() const { return k_; }
    bool evaluate(const Word& x) const override;
    bool evaluate_index(std::uint64_t index) const override;

  private:
    std::size_t k_;
    std::size_t n_;  // k^2
};

RubinsteinCyclic rubinstein_cyclic(std::size_t k);

/// Seeded test-instance generator: a pattern with uniformly random support
/// of size k and uniformly random values, closed under the cyclic group,
/// optionally augmented with one random product of disjoint transpositions
/// when the orbit provably stays enumerable. Deterministic in the seed; the
/// result is always transitive and the pattern is a minterm of it.
OrbitPattern random_minterm_transitive(std::size_t n, std::size_t k,
                                       std::uint64_t seed);

}  // namespace senslab
