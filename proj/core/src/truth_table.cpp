#include "senslab/truth_table.hpp"

#include <string>

#include "senslab/errors.hpp"
#include "senslab/parallel.hpp"

namespace senslab {

namespace {
void check_dense(std::size_t n, std::size_t dense_limit) {
    if (n > dense_limit) {
        throw budget_exceeded("arity " + std::to_string(n) +
                              " exceeds the dense limit " +
                              std::to_string(dense_limit));
    }
    if (n > 48) {
        throw budget_exceeded("dense tables beyond 2^48 entries are not supported");
    }
}
}  // namespace

TruthTable::TruthTable(std::size_t n, std::vector<std::uint64_t> bits,
                       std::size_t dense_limit)
    : n_(n), bits_(std::move(bits)) {
    if (n == 0) throw invalid_parameter("arity must be at least 1");
    check_dense(n, dense_limit);
    const std::uint64_t blocks = (entry_count() + 63) / 64;
    if (bits_.size() != blocks) {
        throw invalid_parameter("packed table has " +
                                std::to_string(bits_.size()) +
                                " blocks, expected " + std::to_string(blocks));
    }
    if (n_ < 6) bits_[0] &= (std::uint64_t{1} << entry_count()) - 1;
}

TruthTable TruthTable::from_chars(std::size_t n, std::string_view entries,
                                  std::size_t dense_limit) {
    if (n == 0) throw invalid_parameter("arity must be at least 1");
    check_dense(n, dense_limit);
    const std::uint64_t count = std::uint64_t{1} << n;
    if (entries.size() != count) {
        throw invalid_parameter("table for arity " + std::to_string(n) +
                                " needs " + std::to_string(count) +
                                " entries, got " +
                                std::to_string(entries.size()));
    }
    std::vector<std::uint64_t> bits((count + 63) / 64, 0);
    for (std::uint64_t i = 0; i < count; ++i) {
        const char c = entries[i];
        if (c == '1') {
            bits[i >> 6] |= std::uint64_t{1} << (i & 63);
        } else if (c != '0') {
            throw invalid_parameter("table entries may contain only 0 and 1");
        }
    }
    return TruthTable(n, std::move(bits), dense_limit);
}

bool TruthTable::evaluate(const Word& x) const {
    if (x.size() != n_) {
        throw invalid_parameter("arity mismatch: table on " +
                                std::to_string(n_) + " bits, word of " +
                                std::to_string(x.size()));
    }
    return at(x.to_index());
}

std::string TruthTable::to_chars() const {
    std::string out(entry_count(), '0');
    for (std::uint64_t i = 0; i < entry_count(); ++i) {
        if (at(i)) out[i] = '1';
    }
    return out;
}

TruthTable build_truth_table(const BooleanFunction& f, std::size_t dense_limit) {
    const std::size_t n = f.arity();
    check_dense(n, dense_limit);
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint64_t> bits((count + 63) / 64, 0);
    parallel_chunks(0, count, 64,
                    [&](std::uint64_t lo, std::uint64_t hi, std::size_t) {
                        for (std::uint64_t i = lo; i < hi; ++i) {
                            if (f.evaluate_index(i)) {
                                bits[i >> 6] |= std::uint64_t{1} << (i & 63);
                            }
                        }
                    });
    return TruthTable(n, std::move(bits), dense_limit);
}

}  // namespace senslab
