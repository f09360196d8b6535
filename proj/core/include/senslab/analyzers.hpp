#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "senslab/boolean_function.hpp"
#include "senslab/partial_assignment.hpp"
#include "senslab/truth_table.hpp"
#include "senslab/word.hpp"

namespace senslab {

/// Arity bound for unrestricted global block-sensitivity scans.
inline constexpr std::size_t kDefaultBlockScanLimit = 16;

/// Node budget for the disjoint-packing search at one input.
inline constexpr std::uint64_t kDefaultNodeCap = 10'000'000;

/// One computed measure. When `exhausted` is set a search budget ran out and
/// the value is only a certified lower bound; otherwise it is exact. The
/// witness, when present, attains the value under the pointwise operation.
struct MeasureReport {
    std::string measure;          // "s", "s0", "s1", "bs", "bs_l"
    std::uint64_t value = 0;
    std::optional<Word> witness;
    std::string method;           // "exhaustive", "pointwise", "block-search", "witness"
    std::optional<std::size_t> dense_limit;
    std::optional<std::size_t> block_cap;
    std::optional<std::uint64_t> node_cap;
    bool exhausted = false;
};

/// Number of positions i with f(x) != f(x^i); n evaluations of f.
std::size_t sensitivity_at(const BooleanFunction& f, const Word& x);

/// The positions themselves, ascending.
std::vector<std::size_t> sensitive_positions(const BooleanFunction& f,
                                             const Word& x);

struct GlobalSensitivity {
    MeasureReport s;
    MeasureReport s0;
    MeasureReport s1;
};

/// Exact maxima of pointwise sensitivity over all 2^n words, split by the
/// function value. Witnesses are the lowest word values attaining each
/// maximum; a side with no inputs (constant function) reports value 0 with
/// no witness.
GlobalSensitivity global_sensitivity(const TruthTable& f);

/// A disjoint family of sensitive blocks at a base word.
struct BlockPacking {
    Word base;
    std::vector<std::vector<std::size_t>> blocks;
};

struct BlockSensitivityResult {
    std::size_t value;
    BlockPacking packing;
    bool exhausted;                   // node cap hit, value is a lower bound
    std::uint64_t nodes_explored;
};

/// Maximum number of pairwise disjoint blocks whose flips change f at x,
/// with every block of size at most `block_cap` (unrestricted when absent).
/// Enumerates inclusion-minimal sensitive blocks in (size, position-lex)
/// order, then maximizes the disjoint selection by branch and bound.
/// Feasible for small arities only; requires n <= 63.
BlockSensitivityResult block_sensitivity_at(
    const BooleanFunction& f, const Word& x,
    std::optional<std::size_t> block_cap = std::nullopt,
    std::uint64_t node_cap = kDefaultNodeCap);

/// Dense fast path of the same computation.
BlockSensitivityResult block_sensitivity_at(
    const TruthTable& f, const Word& x,
    std::optional<std::size_t> block_cap = std::nullopt,
    std::uint64_t node_cap = kDefaultNodeCap);

/// Max of block_sensitivity_at over all words, deterministic lowest witness.
/// Requires f.arity() <= scan_limit.
MeasureReport global_block_sensitivity(
    const TruthTable& f, std::optional<std::size_t> block_cap = std::nullopt,
    std::size_t scan_limit = kDefaultBlockScanLimit,
    std::uint64_t node_cap = kDefaultNodeCap);

/// Positions i for which some word has f(x) != f(x^i), ascending.
std::vector<std::size_t> effective_variables(const TruthTable& f);

/// True iff every extension of p evaluates to 1 and no sub-assignment with
/// one support position removed still forces 1. Enumerates extensions;
/// throws budget_exceeded when (|S| + 1) * 2^(n - |S|) evaluations would
/// exceed eval_budget.
bool verify_minterm(const BooleanFunction& f, const PartialAssignment& p,
                    std::uint64_t eval_budget = std::uint64_t{1} << 24);

/// Sensitivity against the logarithmic lower bound over effective variables:
/// s(f) >= log2(n')/2 - log2(log2(n'))/2 + 1/2 with n' effective variables.
/// Not applicable when fewer than two variables are effective.
struct SimonBoundReport {
    bool applicable = false;
    bool holds = false;
    std::size_t sensitivity = 0;
    std::size_t effective_count = 0;
    double bound = 0.0;
};

SimonBoundReport simon_bound_check(const TruthTable& f);

}  // namespace senslab
