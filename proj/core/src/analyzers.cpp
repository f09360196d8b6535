#include "senslab/analyzers.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>
#include <unordered_set>

#include "senslab/errors.hpp"
#include "senslab/parallel.hpp"

namespace senslab {

namespace {

void check_arity(const BooleanFunction& f, const Word& x) {
    if (f.arity() != x.size()) {
        throw invalid_parameter("arity mismatch: function on " +
                                std::to_string(f.arity()) + " bits, word of " +
                                std::to_string(x.size()));
    }
}

// ---------------------------------------------------------------------------
// Pointwise sensitivity
// ---------------------------------------------------------------------------

}  // namespace

std::size_t sensitivity_at(const BooleanFunction& f, const Word& x) {
    check_arity(f, x);
    const bool fx = f.evaluate(x);
    std::size_t count = 0;
    for (std::size_t pos = 1; pos <= x.size(); ++pos) {
        if (f.evaluate(x.flipped(pos)) != fx) ++count;
    }
    return count;
}

std::vector<std::size_t> sensitive_positions(const BooleanFunction& f,
                                             const Word& x) {
    check_arity(f, x);
    const bool fx = f.evaluate(x);
    std::vector<std::size_t> out;
    for (std::size_t pos = 1; pos <= x.size(); ++pos) {
        if (f.evaluate(x.flipped(pos)) != fx) out.push_back(pos);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Global sensitivity scan
// ---------------------------------------------------------------------------

namespace {

struct ScanBest {
    std::size_t value = 0;
    std::optional<std::uint64_t> witness;
};

void offer(ScanBest& best, std::size_t v, std::uint64_t idx) {
    if (!best.witness.has_value() || v > best.value) {
        best.value = v;
        best.witness = idx;
    } else if (v == best.value && idx < *best.witness) {
        best.witness = idx;
    }
}

void merge(ScanBest& into, const ScanBest& from) {
    if (from.witness.has_value()) offer(into, from.value, *from.witness);
}

MeasureReport side_report(std::string name, const ScanBest& best,
                          std::size_t n) {
    MeasureReport r;
    r.measure = std::move(name);
    r.value = best.value;
    if (best.witness) r.witness = Word::from_index(n, *best.witness);
    r.method = "exhaustive";
    return r;
}

}  // namespace

GlobalSensitivity global_sensitivity(const TruthTable& f) {
    const std::size_t n = f.arity();
    const std::uint64_t count = f.entry_count();
    const std::size_t workers = worker_count();
    std::vector<ScanBest> best0(workers), best1(workers);

    parallel_chunks(0, count, 64,
                    [&](std::uint64_t lo, std::uint64_t hi, std::size_t w) {
                        ScanBest b0, b1;
                        for (std::uint64_t idx = lo; idx < hi; ++idx) {
                            const bool fx = f.at(idx);
                            std::size_t s = 0;
                            for (std::size_t b = 0; b < n; ++b) {
                                if (f.at(idx ^ (std::uint64_t{1} << b)) != fx) {
                                    ++s;
                                }
                            }
                            offer(fx ? b1 : b0, s, idx);
                        }
                        best0[w] = b0;
                        best1[w] = b1;
                    });

    ScanBest s0, s1, s;
    for (std::size_t w = 0; w < workers; ++w) {
        merge(s0, best0[w]);
        merge(s1, best1[w]);
    }
    merge(s, s0);
    merge(s, s1);

    GlobalSensitivity out;
    out.s = side_report("s", s, n);
    out.s0 = side_report("s0", s0, n);
    out.s1 = side_report("s1", s1, n);
    return out;
}

// ---------------------------------------------------------------------------
// Block sensitivity
// ---------------------------------------------------------------------------

namespace {

// Enumerates all j-subsets of [1, n] in ascending position-lex order,
// maintaining the index-space mask (position i at bit n - i) incrementally.
class CombinationEnumerator {
  public:
    CombinationEnumerator(std::size_t n, std::size_t j) : n_(n), pos_(j) {
        for (std::size_t t = 0; t < j; ++t) pos_[t] = t + 1;
        done_ = j > n;
        if (!done_) rebuild_mask(0);
    }

    bool done() const { return done_; }
    std::uint64_t mask() const { return mask_; }
    const std::vector<std::size_t>& positions() const { return pos_; }

    void advance() {
        const std::size_t j = pos_.size();
        std::size_t t = j;
        while (t > 0 && pos_[t - 1] == n_ - (j - t)) --t;
        if (t == 0) {
            done_ = true;
            return;
        }
        ++pos_[t - 1];
        for (std::size_t u = t; u < j; ++u) pos_[u] = pos_[u - 1] + 1;
        rebuild_mask(t - 1);
    }

  private:
    void rebuild_mask(std::size_t from) {
        // Clear bits for suffix [from, j) and re-add.
        std::uint64_t keep = 0;
        for (std::size_t t = 0; t < from; ++t) {
            keep |= std::uint64_t{1} << (n_ - pos_[t]);
        }
        mask_ = keep;
        for (std::size_t t = from; t < pos_.size(); ++t) {
            mask_ |= std::uint64_t{1} << (n_ - pos_[t]);
        }
    }

    std::size_t n_;
    std::vector<std::size_t> pos_;
    std::uint64_t mask_ = 0;
    bool done_ = false;
};

// Covered-set storage strategies for the minimality filter.
struct StampCovered {
    explicit StampCovered(std::size_t n) : stamps(std::uint64_t{1} << n, 0) {}

    void next_word() {
        if (++token == 0) {
            std::fill(stamps.begin(), stamps.end(), 0);
            token = 1;
        }
    }
    bool contains(std::uint64_t mask) const { return stamps[mask] == token; }
    void insert(std::uint64_t mask) { stamps[mask] = token; }

    std::vector<std::uint32_t> stamps;
    std::uint32_t token = 0;
};

struct SetCovered {
    void next_word() { set.clear(); }
    bool contains(std::uint64_t mask) const { return set.contains(mask); }
    void insert(std::uint64_t mask) { set.insert(mask); }

    std::unordered_set<std::uint64_t> set;
};

/// Inclusion-minimal sensitive blocks at one word, in (size, position-lex)
/// order, as index-space masks. `sens` evaluates whether flipping a mask
/// changes the function value.
template <typename Covered, typename Sens>
std::vector<std::uint64_t> minimal_sensitive_blocks(std::size_t n,
                                                    std::size_t size_cap,
                                                    Covered& covered,
                                                    const Sens& sens) {
    covered.next_word();
    std::vector<std::uint64_t> minimal;
    for (std::size_t j = 1; j <= size_cap; ++j) {
        for (CombinationEnumerator combo(n, j); !combo.done(); combo.advance()) {
            const std::uint64_t mask = combo.mask();
            bool child_covered = false;
            std::uint64_t rest = mask;
            while (rest) {
                const std::uint64_t low = rest & (~rest + 1);
                if (covered.contains(mask ^ low)) {
                    child_covered = true;
                    break;
                }
                rest ^= low;
            }
            const bool sensitive = sens(mask, combo.positions());
            if (sensitive && !child_covered) minimal.push_back(mask);
            if (sensitive || child_covered) covered.insert(mask);
        }
    }
    return minimal;
}

struct PackOutcome {
    std::size_t count = 0;
    std::vector<std::uint64_t> chosen;
    bool exhausted = false;
    std::uint64_t nodes = 0;
};

/// Maximum disjoint selection from blocks sorted by (size, lex), branch and
/// bound with include-first order; the admissible bound on additional blocks
/// is min(remaining count, free positions / smallest remaining block size).
PackOutcome pack_max_disjoint(const std::vector<std::uint64_t>& blocks,
                              std::size_t n, std::uint64_t node_cap) {
    PackOutcome out;
    std::vector<std::uint64_t> current;
    bool have_best = false;

    std::function<void(std::size_t, std::uint64_t, std::size_t)> dfs =
        [&](std::size_t i, std::uint64_t used, std::size_t count) {
            if (out.exhausted) return;
            if (++out.nodes > node_cap) {
                out.exhausted = true;
                return;
            }
            if (!have_best || count > out.count) {
                out.count = count;
                out.chosen = current;
                have_best = true;
            }
            if (i == blocks.size()) return;
            const std::size_t remaining = blocks.size() - i;
            const std::size_t smallest =
                static_cast<std::size_t>(std::popcount(blocks[i]));
            const std::size_t free_bits =
                n - static_cast<std::size_t>(std::popcount(used));
            const std::size_t ub =
                std::min(remaining, smallest == 0 ? remaining
                                                  : free_bits / smallest);
            if (count + ub <= out.count) return;
            if ((blocks[i] & used) == 0) {
                current.push_back(blocks[i]);
                dfs(i + 1, used | blocks[i], count + 1);
                current.pop_back();
            }
            dfs(i + 1, used, count);
        };
    dfs(0, 0, 0);
    return out;
}

std::vector<std::size_t> mask_positions(std::uint64_t mask, std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if (mask & (std::uint64_t{1} << (n - pos))) out.push_back(pos);
    }
    return out;
}

BlockSensitivityResult assemble_result(const Word& x, std::size_t n,
                                       const PackOutcome& packed) {
    BlockPacking packing{x, {}};
    for (std::uint64_t mask : packed.chosen) {
        packing.blocks.push_back(mask_positions(mask, n));
    }
    return BlockSensitivityResult{packed.count, std::move(packing),
                                  packed.exhausted, packed.nodes};
}

std::size_t effective_size_cap(std::size_t n,
                               std::optional<std::size_t> block_cap) {
    return std::min(block_cap.value_or(n), n);
}

}  // namespace

BlockSensitivityResult block_sensitivity_at(const BooleanFunction& f,
                                            const Word& x,
                                            std::optional<std::size_t> block_cap,
                                            std::uint64_t node_cap) {
    check_arity(f, x);
    const std::size_t n = f.arity();
    if (n > 63) {
        throw budget_exceeded(
            "block enumeration is limited to arities up to 63");
    }
    const std::size_t cap = effective_size_cap(n, block_cap);
    SetCovered covered;
    const bool fx = f.evaluate(x);
    const auto sens = [&](std::uint64_t, const std::vector<std::size_t>& pos) {
        return f.evaluate(x.flipped(pos)) != fx;
    };
    const auto minimal = minimal_sensitive_blocks(n, cap, covered, sens);
    return assemble_result(x, n, pack_max_disjoint(minimal, n, node_cap));
}

BlockSensitivityResult block_sensitivity_at(const TruthTable& f, const Word& x,
                                            std::optional<std::size_t> block_cap,
                                            std::uint64_t node_cap) {
    check_arity(f, x);
    const std::size_t n = f.arity();
    const std::size_t cap = effective_size_cap(n, block_cap);
    const std::uint64_t idx = x.to_index();
    const bool fx = f.at(idx);
    const auto sens = [&](std::uint64_t mask, const std::vector<std::size_t>&) {
        return f.at(idx ^ mask) != fx;
    };
    if (n <= 20) {
        StampCovered covered(n);
        const auto minimal = minimal_sensitive_blocks(n, cap, covered, sens);
        return assemble_result(x, n, pack_max_disjoint(minimal, n, node_cap));
    }
    SetCovered covered;
    const auto minimal = minimal_sensitive_blocks(n, cap, covered, sens);
    return assemble_result(x, n, pack_max_disjoint(minimal, n, node_cap));
}

MeasureReport global_block_sensitivity(const TruthTable& f,
                                       std::optional<std::size_t> block_cap,
                                       std::size_t scan_limit,
                                       std::uint64_t node_cap) {
    const std::size_t n = f.arity();
    if (n > scan_limit) {
        throw budget_exceeded("arity " + std::to_string(n) +
                              " exceeds the block-scan limit " +
                              std::to_string(scan_limit));
    }

    // Every inclusion-minimal sensitive block B satisfies |B| <= s(f):
    // at x^B all of B is sensitive. This caps the enumeration size.
    const std::size_t s_global = global_sensitivity(f).s.value;
    const std::size_t cap =
        std::min(effective_size_cap(n, block_cap), std::max<std::size_t>(
                                                       s_global, 1));

    const std::uint64_t count = f.entry_count();
    const std::size_t workers = worker_count();
    std::vector<ScanBest> bests(workers);
    std::vector<std::uint8_t> flags(workers, 0);

    parallel_chunks(0, count, 1,
                    [&](std::uint64_t lo, std::uint64_t hi, std::size_t w) {
                        StampCovered covered(n);
                        ScanBest best;
                        bool exhausted = false;
                        for (std::uint64_t idx = lo; idx < hi; ++idx) {
                            const bool fx = f.at(idx);
                            const auto sens =
                                [&](std::uint64_t mask,
                                    const std::vector<std::size_t>&) {
                                    return f.at(idx ^ mask) != fx;
                                };
                            const auto minimal = minimal_sensitive_blocks(
                                n, cap, covered, sens);
                            const auto packed =
                                pack_max_disjoint(minimal, n, node_cap);
                            exhausted |= packed.exhausted;
                            offer(best, packed.count, idx);
                        }
                        bests[w] = best;
                        flags[w] = exhausted ? 1 : 0;
                    });

    ScanBest best;
    bool exhausted = false;
    for (std::size_t w = 0; w < workers; ++w) {
        merge(best, bests[w]);
        exhausted |= flags[w] != 0;
    }

    MeasureReport r;
    r.measure = block_cap && *block_cap < n ? "bs_l" : "bs";
    r.value = best.value;
    if (best.witness) r.witness = Word::from_index(n, *best.witness);
    r.method = "block-search";
    r.block_cap = block_cap;
    r.node_cap = node_cap;
    r.exhausted = exhausted;
    return r;
}

// ---------------------------------------------------------------------------
// Effective variables, minterm verification, logarithmic bound
// ---------------------------------------------------------------------------

std::vector<std::size_t> effective_variables(const TruthTable& f) {
    const std::size_t n = f.arity();
    std::vector<std::size_t> out;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        const std::uint64_t mask = std::uint64_t{1} << (n - pos);
        for (std::uint64_t idx = 0; idx < f.entry_count(); ++idx) {
            if ((idx & mask) == 0 && f.at(idx) != f.at(idx | mask)) {
                out.push_back(pos);
                break;
            }
        }
    }
    return out;
}

namespace {

/// Gray-code walk over all assignments of `free` positions on top of `base`.
/// Applies `visit` to every word (including base itself); stops early when
/// visit returns true, and reports whether that happened.
bool gray_walk_indices(const BooleanFunction& f, std::uint64_t base,
                       const std::vector<std::size_t>& free,
                       const std::function<bool(bool)>& visit) {
    const std::size_t n = f.arity();
    std::uint64_t idx = base;
    if (visit(f.evaluate_index(idx))) return true;
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t c = 1; c < total; ++c) {
        const std::size_t bit = static_cast<std::size_t>(std::countr_zero(c));
        idx ^= std::uint64_t{1} << (n - free[bit]);
        if (visit(f.evaluate_index(idx))) return true;
    }
    return false;
}

bool gray_walk_words(const BooleanFunction& f, const Word& base,
                     const std::vector<std::size_t>& free,
                     const std::function<bool(bool)>& visit) {
    Word w = base;
    if (visit(f.evaluate(w))) return true;
    const std::uint64_t total = std::uint64_t{1} << free.size();
    for (std::uint64_t c = 1; c < total; ++c) {
        const std::size_t bit = static_cast<std::size_t>(std::countr_zero(c));
        w = w.flipped(free[bit]);
        if (visit(f.evaluate(w))) return true;
    }
    return false;
}

bool walk_extensions(const BooleanFunction& f, const PartialAssignment& p,
                     const std::vector<std::size_t>& free,
                     const std::function<bool(bool)>& visit) {
    const std::size_t n = f.arity();
    std::vector<std::size_t> ones;
    for (const auto& [pos, value] : p.entries()) {
        if (value) ones.push_back(pos);
    }
    const Word base = Word::from_support(n, ones);
    if (n <= 63) return gray_walk_indices(f, base.to_index(), free, visit);
    return gray_walk_words(f, base, free, visit);
}

}  // namespace

bool verify_minterm(const BooleanFunction& f, const PartialAssignment& p,
                    std::uint64_t eval_budget) {
    if (f.arity() != p.ambient_size()) {
        throw invalid_parameter("arity mismatch between function and pattern");
    }
    const std::size_t n = f.arity();
    const std::size_t k = p.support_size();
    const std::size_t free_count = n - k;
    if (free_count >= 63 ||
        (std::uint64_t{k + 1} << free_count) > eval_budget) {
        throw budget_exceeded("minterm verification needs " +
                              std::to_string(k + 1) + " * 2^" +
                              std::to_string(free_count) +
                              " evaluations, over the budget");
    }

    std::vector<std::size_t> free;
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if (!p.defines(pos)) free.push_back(pos);
    }

    // Every extension of p must evaluate to 1.
    const bool found_zero =
        walk_extensions(f, p, free, [](bool value) { return !value; });
    if (found_zero) return false;

    // Dropping any one support position must break the certificate: some
    // extension with that position flipped evaluates to 0.
    for (std::size_t pos : p.support()) {
        const PartialAssignment flipped = p.value_flipped(pos);
        const bool has_zero =
            walk_extensions(f, flipped, free, [](bool value) { return !value; });
        if (!has_zero) return false;
    }
    return true;
}

SimonBoundReport simon_bound_check(const TruthTable& f) {
    SimonBoundReport report;
    const auto effective = effective_variables(f);
    report.effective_count = effective.size();
    if (effective.size() < 2) return report;  // log log undefined
    report.applicable = true;
    report.sensitivity = global_sensitivity(f).s.value;
    const double log_n = std::log2(static_cast<double>(effective.size()));
    report.bound = 0.5 * log_n - 0.5 * std::log2(log_n) + 0.5;
    report.holds = static_cast<double>(report.sensitivity) >= report.bound;
    return report;
}

}  // namespace senslab
