#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "senslab/boolean_function.hpp"
#include "senslab/errors.hpp"
#include "senslab/group.hpp"
#include "senslab/orbit_pattern.hpp"
#include "senslab/partial_assignment.hpp"
#include "senslab/truth_table.hpp"
#include "senslab/word.hpp"
#include "support/oracles.hpp"

using namespace senslab;

TEST_CASE("single-bit flips") {
    const Word x = Word::from_bits("1100");
    CHECK(x.flipped(1).to_string() == "0100");
    CHECK(Word::from_bits("0000").flipped(4).to_string() == "0001");
    CHECK_THROWS_AS(x.flipped(0), invalid_parameter);
    CHECK_THROWS_AS(x.flipped(5), invalid_parameter);

    // Involution on random words and positions.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 90);
        const Word w = oracles::random_word(n, rng);
        const std::size_t pos = 1 + uniform_below(rng, n);
        CHECK(w.flipped(pos).flipped(pos) == w);
    }
}

TEST_CASE("block flips") {
    const Word x = Word::from_bits("1100");
    const std::vector<std::size_t> block{1, 3};
    CHECK(x.flipped(block).to_string() == "0110");
    CHECK(x.flipped(std::vector<std::size_t>{}) == x);
    const std::vector<std::size_t> all{1, 2, 3, 4};
    CHECK(Word::from_bits("0000").flipped(all).to_string() == "1111");

    // A block flip is the fold of single flips in any order.
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + uniform_below(rng, 70);
        Word w = oracles::random_word(n, rng);
        std::vector<std::size_t> positions;
        for (std::size_t pos = 1; pos <= n; ++pos) {
            if (uniform_below(rng, 3) == 0) positions.push_back(pos);
        }
        Word folded = w;
        for (std::size_t pos : positions) folded = folded.flipped(pos);
        CHECK(w.flipped(positions) == folded);
    }
}

TEST_CASE("cyclic shifts") {
    CHECK(Word::from_bits("1100").rotated(1).to_string() == "1001");
    const Word x = Word::from_bits("10110");
    CHECK(x.rotated(0) == x);
    CHECK(x.rotated(5) == x);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 130);
        const Word w = oracles::random_word(n, rng);
        const std::size_t a = uniform_below(rng, 3 * n);
        const std::size_t b = uniform_below(rng, 3 * n);
        CHECK(w.rotated(a).rotated(b) == w.rotated((a + b) % n));
    }

    // Iterating the unit shift n times is the identity.
    const Word w = oracles::random_word(67, rng);
    Word cursor = w;
    for (std::size_t i = 0; i < 67; ++i) cursor = cursor.rotated(1);
    CHECK(cursor == w);
}

TEST_CASE("support and weight") {
    const Word x = Word::from_bits("1010");
    CHECK(x.support() == std::vector<std::size_t>{1, 3});
    CHECK(x.weight() == 2);
    CHECK(Word::from_bits("0000").support().empty());
    CHECK(Word::from_bits("0000").weight() == 0);
    CHECK(Word::from_bits("1111").support() == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(Word::from_bits("1111").weight() == 4);
}

TEST_CASE("index round trip uses position 1 as the most significant digit") {
    CHECK(Word::from_bits("1100").to_index() == 0b1100);
    CHECK(Word::from_index(4, 0b0001).to_string() == "0001");
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 20);
        const std::uint64_t idx = uniform_below(rng, std::uint64_t{1} << n);
        CHECK(Word::from_index(n, idx).to_index() == idx);
    }
}

TEST_CASE("partial assignment extension") {
    const PartialAssignment p(
        4, std::vector<std::pair<std::size_t, bool>>{{1, true}, {2, true}});
    CHECK(extends(p, Word::from_bits("1101")));
    CHECK_FALSE(extends(p, Word::from_bits("1011")));
    CHECK(extends(PartialAssignment::empty(4), Word::from_bits("0110")));
    CHECK_THROWS_AS(extends(p, Word::from_bits("110")), invalid_parameter);

    CHECK(p.weight() == 2);
    CHECK(p.support_size() == 2);

    // Monotone under support restriction.
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + uniform_below(rng, 40);
        std::vector<std::pair<std::size_t, bool>> entries;
        for (std::size_t pos = 1; pos <= n; ++pos) {
            if (uniform_below(rng, 2)) {
                entries.emplace_back(pos, uniform_below(rng, 2) == 1);
            }
        }
        const PartialAssignment full(n, entries);
        const Word x = oracles::random_word(n, rng);
        if (!extends(full, x)) continue;
        PartialAssignment restricted = full;
        for (std::size_t pos : full.support()) {
            if (uniform_below(rng, 2)) restricted = restricted.without(pos);
        }
        CHECK(extends(restricted, x));
    }
}

TEST_CASE("partial assignment validation") {
    using entry_list = std::vector<std::pair<std::size_t, bool>>;
    CHECK_THROWS_AS(PartialAssignment(4, entry_list{{5, true}}),
                    invalid_parameter);
    CHECK_THROWS_AS(PartialAssignment(4, entry_list{{2, true}, {2, false}}),
                    invalid_parameter);
}

TEST_CASE("truth table construction") {
    const CallbackFunction or2(2, [](const Word& x) {
        return x.bit(1) || x.bit(2);
    });
    const TruthTable table = build_truth_table(or2);
    CHECK(table.to_chars() == "0111");

    const CallbackFunction zero3(3, [](const Word&) { return false; });
    CHECK(build_truth_table(zero3).to_chars() == "00000000");

    const CallbackFunction wide(30, [](const Word&) { return false; });
    CHECK_THROWS_AS(build_truth_table(wide), budget_exceeded);
}

TEST_CASE("adjacent-pair closure table matches a brute-force predicate") {
    const PartialAssignment pair(
        4, std::vector<std::pair<std::size_t, bool>>{{1, true}, {2, true}});
    const OrbitPattern f = minterm_closure(pair, cyclic_group(4), 4);
    const TruthTable table = build_truth_table(f);
    for (std::uint64_t idx = 0; idx < 16; ++idx) {
        const std::string bits = Word::from_index(4, idx).to_string();
        bool expected = false;
        for (std::size_t i = 0; i < 4; ++i) {
            if (bits[i] == '1' && bits[(i + 1) % 4] == '1') expected = true;
        }
        CHECK(table.at(idx) == expected);
    }
}

TEST_CASE("table lookups agree with the defining evaluator on random words") {
    std::mt19937_64 rng(16);
    const CallbackFunction parity(10, [](const Word& x) {
        return x.weight() % 2 == 1;
    });
    const TruthTable table = build_truth_table(parity);
    for (int trial = 0; trial < 1000; ++trial) {
        const Word w = oracles::random_word(10, rng);
        CHECK(table.evaluate(w) == parity.evaluate(w));
    }
}

TEST_CASE("table file char order is the word value order") {
    // OR on two bits: entries for 00, 01, 10, 11.
    const TruthTable table = TruthTable::from_chars(2, "0111");
    CHECK(table.at(0) == false);
    CHECK(table.at(3) == true);
    CHECK(table.evaluate(Word::from_bits("10")) == true);
}
