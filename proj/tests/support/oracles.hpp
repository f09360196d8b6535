#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here works on plain bit strings and deliberately avoids the
// library's evaluation paths.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "senslab/boolean_function.hpp"
#include "senslab/partial_assignment.hpp"
#include "senslab/truth_table.hpp"
#include "senslab/util.hpp"
#include "senslab/word.hpp"

namespace oracles {

/// String-rotation matcher: does some cyclic rotation of `bits` agree with
/// the (position, value) constraints?
inline bool naive_cyclic_match(
    const std::string& bits,
    const std::vector<std::pair<std::size_t, bool>>& constraints) {
    const std::size_t n = bits.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (const auto& [pos, value] : constraints) {
            const char c = bits[(pos - 1 + shift) % n];
            if ((c == '1') != value) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

/// Shift-and-check evaluator for the two-level block construction: some
/// rotation has a k-aligned block holding exactly two adjacent ones.
inline bool naive_rubinstein(const std::string& bits, std::size_t k) {
    const std::size_t n = bits.size();
    for (std::size_t shift = 0; shift < n; ++shift) {
        std::string rotated;
        for (std::size_t i = 0; i < n; ++i) rotated += bits[(i + shift) % n];
        for (std::size_t block = 0; block < k; ++block) {
            const std::string piece = rotated.substr(block * k, k);
            const auto ones = std::count(piece.begin(), piece.end(), '1');
            bool adjacent = false;
            for (std::size_t t = 0; t + 1 < k; ++t) {
                if (piece[t] == '1' && piece[t + 1] == '1') adjacent = true;
            }
            if (ones == 2 && adjacent) return true;
        }
    }
    return false;
}

/// Per-definition sensitivity: flips realized through Word values, counted
/// one position at a time against the table's word-based evaluator.
inline std::size_t naive_sensitivity_at(const senslab::TruthTable& table,
                                        const senslab::Word& x) {
    const bool fx = table.evaluate(x);
    std::size_t count = 0;
    for (std::size_t pos = 1; pos <= x.size(); ++pos) {
        if (table.evaluate(x.flipped(pos)) != fx) ++count;
    }
    return count;
}

struct NaiveGlobal {
    std::size_t s = 0;
    std::size_t s0 = 0;
    std::size_t s1 = 0;
};

inline NaiveGlobal naive_global_sensitivity(const senslab::TruthTable& table) {
    NaiveGlobal out;
    const std::size_t n = table.arity();
    for (std::uint64_t idx = 0; idx < table.entry_count(); ++idx) {
        const senslab::Word x = senslab::Word::from_index(n, idx);
        const std::size_t s = naive_sensitivity_at(table, x);
        out.s = std::max(out.s, s);
        if (table.evaluate(x)) {
            out.s1 = std::max(out.s1, s);
        } else {
            out.s0 = std::max(out.s0, s);
        }
    }
    return out;
}

inline senslab::TruthTable random_table(std::size_t n, std::mt19937_64& rng) {
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> bits((count + 63) / 64, 0);
    for (auto& block : bits) block = rng();
    return senslab::TruthTable(n, std::move(bits));
}

/// Monotone function as the upward closure of random generator words:
/// f(x) = 1 iff x covers some generator.
inline senslab::TruthTable random_monotone_table(std::size_t n,
                                                 std::mt19937_64& rng) {
    const std::uint64_t count = std::uint64_t{1} << n;
    const std::size_t generators = 1 + senslab::uniform_below(rng, 4);
    std::vector<std::uint64_t> mins;
    for (std::size_t g = 0; g < generators; ++g) {
        mins.push_back(senslab::uniform_below(rng, count));
    }
    std::vector<std::uint64_t> bits((count + 63) / 64, 0);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        for (std::uint64_t m : mins) {
            if ((idx & m) == m) {
                bits[idx >> 6] |= std::uint64_t{1} << (idx & 63);
                break;
            }
        }
    }
    return senslab::TruthTable(n, std::move(bits));
}

inline senslab::Word random_word(std::size_t n, std::mt19937_64& rng) {
    std::string bits(n, '0');
    for (auto& c : bits) c = senslab::uniform_below(rng, 2) ? '1' : '0';
    return senslab::Word::from_bits(bits);
}

}  // namespace oracles
