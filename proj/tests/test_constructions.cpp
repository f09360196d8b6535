#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>

#include "senslab/analyzers.hpp"
#include "senslab/constructions.hpp"
#include "senslab/errors.hpp"
#include "senslab/truth_table.hpp"
#include "senslab/util.hpp"
#include "support/oracles.hpp"

using namespace senslab;

namespace {

std::string repeat(const std::string& piece, std::size_t times) {
    std::string out;
    for (std::size_t i = 0; i < times; ++i) out += piece;
    return out;
}

/// Longest run of consecutive zeros in a linear string.
std::size_t longest_zero_run(const std::string& bits) {
    std::size_t best = 0;
    std::size_t run = 0;
    for (char c : bits) {
        run = c == '0' ? run + 1 : 0;
        best = std::max(best, run);
    }
    return best;
}

std::size_t count_zero_runs_of(const std::string& bits, std::size_t length) {
    std::size_t count = 0;
    std::size_t run = 0;
    for (std::size_t i = 0; i <= bits.size(); ++i) {
        if (i < bits.size() && bits[i] == '0') {
            ++run;
        } else {
            if (run == length) ++count;
            run = 0;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("window pattern shape") {
    for (std::size_t k = 8; k <= 32; ++k) {
        const PatternSpec spec = block_pattern(k);
        CHECK(spec.fixed.support_size() == 6 * k - 2);
        CHECK(spec.fixed.weight() == 5 * k);
        CHECK(spec.fixed.support_size() - spec.fixed.weight() == k - 2);
    }
    CHECK_THROWS_WITH_AS(block_pattern(7), "k >= 8 required", invalid_parameter);
}

TEST_CASE("window predicate accepts exactly the pinned positions") {
    const auto [g, spec] = auxiliary_g(8);
    CHECK(g.arity() == 64);
    CHECK(spec.fixed.support_size() == 46);

    const std::string accepted =
        "11000000" + repeat("11111000", 6) + "11111111";
    REQUIRE(accepted.size() == 64);
    CHECK(g.evaluate(Word::from_bits(accepted)));

    std::string rejected = accepted;
    rejected[0] = '0';
    CHECK_FALSE(g.evaluate(Word::from_bits(rejected)));

    // Free positions do not matter.
    std::string free_played = accepted;
    free_played[5 + 8] = '1';  // sixth bit of block 2
    CHECK(g.evaluate(Word::from_bits(free_played)));

    CHECK_THROWS_AS(auxiliary_g(7), invalid_parameter);
}

TEST_CASE("one-side witness word") {
    const Word w = witness_one(512, 8);
    CHECK(w.weight() == 5 * 8);
    CHECK(new_function(512, 8).evaluate(w));

    const Word padded = witness_one(65, 8);
    CHECK_FALSE(padded.bit(65));
    CHECK(new_function(65, 8).evaluate(padded));
}

TEST_CASE("zero-run structure of the witness prefix") {
    for (std::size_t k = 8; k <= 20; ++k) {
        const std::string prefix =
            witness_one(k * k, k).to_string().substr(0, k * k);
        CHECK(longest_zero_run(prefix) == k - 2);
        CHECK(count_zero_runs_of(prefix, k - 2) == 1);
        // No other run reaches k - 4.
        std::size_t runs_at_least = 0;
        for (std::size_t len = k - 4; len < k - 2; ++len) {
            runs_at_least += count_zero_runs_of(prefix, len);
        }
        CHECK(runs_at_least == 0);
    }
}

TEST_CASE("zero-side witness word") {
    const auto [word, sensitive] = witness_zero(512, 8);
    REQUIRE(sensitive.size() == 8);
    for (std::size_t j = 0; j < 8; ++j) {
        CHECK(sensitive[j] == j * 64 + 2);
    }
    const OrbitPattern f = new_function(512, 8);
    CHECK_FALSE(f.evaluate(word));
    for (std::size_t pos : sensitive) {
        CHECK(f.evaluate(word.flipped(pos)));
    }

    const auto single = witness_zero(100, 10);
    CHECK(single.sensitive_positions == std::vector<std::size_t>{2});
}

TEST_CASE("family parameter selection") {
    CHECK(theorem31_function(512).minterm().support_size() == 6 * 8 - 2);
    CHECK(theorem31_function(513).minterm().support_size() == 6 * 8 - 2);
    CHECK(theorem31_function(1000).minterm().support_size() == 6 * 10 - 2);
    CHECK_THROWS_WITH_AS(theorem31_function(511), "n >= 512 required",
                         invalid_parameter);

    CHECK(theorem32_function(64).minterm().support_size() == 6 * 8 - 2);
    CHECK(theorem32_function(100).minterm().support_size() == 6 * 10 - 2);
    CHECK(theorem32_function(101).minterm().support_size() == 6 * 10 - 2);
    CHECK_THROWS_AS(theorem32_function(63), invalid_parameter);

    CHECK_THROWS_AS(new_function(60, 8), invalid_parameter);
}

TEST_CASE("window closure equals a naive cyclic matcher on a toy pattern") {
    // A small stand-in with support 5 on 15 bits, same flavor as the real
    // pattern: a pinned prefix and a pinned zero.
    const PartialAssignment toy(
        15, std::vector<std::pair<std::size_t, bool>>{
                {1, true}, {2, true}, {3, false}, {7, true}, {8, true}});
    const OrbitPattern f = minterm_closure(toy, cyclic_group(15), 15);
    const auto constraints = toy.entries();
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << 15); ++idx) {
        const Word x = Word::from_index(15, idx);
        const bool expected = oracles::naive_cyclic_match(x.to_string(),
                                                          constraints);
        REQUIRE(f.evaluate(x) == expected);
        REQUIRE(f.evaluate_index(idx) == expected);
    }
}

TEST_CASE("closures are invariant under their generators") {
    std::mt19937_64 rng(31);
    const OrbitPattern f = new_function(512, 8);
    for (int trial = 0; trial < 1000; ++trial) {
        const Word x = oracles::random_word(512, rng);
        CHECK(f.evaluate(x) == f.evaluate(x.rotated(1)));
    }
}

TEST_CASE("simple closures") {
    const PartialAssignment point(
        3, std::vector<std::pair<std::size_t, bool>>{{1, true}});
    const OrbitPattern or3 = minterm_closure(point, cyclic_group(3), 3);
    const TruthTable table = build_truth_table(or3);
    CHECK(table.to_chars() == "01111111");

    CHECK_THROWS_AS(
        minterm_closure(PartialAssignment::empty(3), cyclic_group(3), 3),
        invalid_parameter);
    CHECK_THROWS_AS(
        minterm_closure(point, GeneratedGroup(3, {Permutation::identity(3)}),
                        3),
        invalid_parameter);
}

TEST_CASE("two-level block construction") {
    const RubinsteinCyclic f = rubinstein_cyclic(4);
    CHECK(f.arity() == 16);
    CHECK(f.evaluate(Word::from_bits("0110000000000000")));
    CHECK_FALSE(f.evaluate(Word(16)));
    CHECK_THROWS_AS(rubinstein_cyclic(1), invalid_parameter);

    // Wrap case: ones at the seam rotate into one block.
    CHECK(f.evaluate(Word::from_bits("1000000000000001")));
    // Two ones at cyclic distance 7 never share a block of size 4.
    CHECK_FALSE(f.evaluate(Word::from_bits("1000000100000000")));

    // Against the shift-and-check oracle, all words at k = 3.
    const RubinsteinCyclic g = rubinstein_cyclic(3);
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << 9); ++idx) {
        const Word x = Word::from_index(9, idx);
        const bool expected = oracles::naive_rubinstein(x.to_string(), 3);
        REQUIRE(g.evaluate(x) == expected);
        REQUIRE(g.evaluate_index(idx) == expected);
    }
}

TEST_CASE("two-level construction is cyclically invariant") {
    std::mt19937_64 rng(32);
    const RubinsteinCyclic f = rubinstein_cyclic(7);
    for (int trial = 0; trial < 1000; ++trial) {
        const Word x = oracles::random_word(49, rng);
        CHECK(f.evaluate(x) == f.evaluate(x.rotated(1)));
    }
}

TEST_CASE("seeded instances are deterministic and minterm-backed") {
    const OrbitPattern a = random_minterm_transitive(10, 3, 1);
    const OrbitPattern b = random_minterm_transitive(10, 3, 1);
    CHECK(a.minterm() == b.minterm());
    CHECK(build_truth_table(a).to_chars() == build_truth_table(b).to_chars());

    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 4 + uniform_below(rng, 11);  // up to 14
        const std::size_t k = 1 + uniform_below(rng, n);
        const std::uint64_t seed = rng();
        const OrbitPattern f = random_minterm_transitive(n, k, seed);
        CHECK(f.minterm().support_size() == k);
        CHECK(is_transitive(f.group()));
        CHECK(verify_minterm(f, f.minterm()));
    }
}
