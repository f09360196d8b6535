#include "senslab/partial_assignment.hpp"

#include <bit>

#include "senslab/errors.hpp"
#include "senslab/util.hpp"

namespace senslab {

namespace {
std::size_t block_count(std::size_t n) { return (n + 63) / 64; }

std::pair<std::size_t, std::uint64_t> locate(std::size_t pos) {
    return {(pos - 1) >> 6, std::uint64_t{1} << ((pos - 1) & 63)};
}
}  // namespace

PartialAssignment::PartialAssignment(std::size_t n,
                                     std::vector<std::uint64_t> support,
                                     std::vector<std::uint64_t> values)
    : n_(n), support_(std::move(support)), values_(std::move(values)) {}

PartialAssignment::PartialAssignment(
    std::size_t n, std::span<const std::pair<std::size_t, bool>> entries)
    : n_(n), support_(block_count(n), 0), values_(block_count(n), 0) {
    if (n == 0) throw invalid_parameter("ambient arity must be at least 1");
    for (const auto& [pos, value] : entries) {
        if (pos < 1 || pos > n) {
            throw invalid_parameter("support position " + std::to_string(pos) +
                                    " out of range [1, " + std::to_string(n) +
                                    "]");
        }
        const auto [blk, mask] = locate(pos);
        if (support_[blk] & mask) {
            throw invalid_parameter("duplicate support position " +
                                    std::to_string(pos));
        }
        support_[blk] |= mask;
        if (value) values_[blk] |= mask;
    }
}

PartialAssignment PartialAssignment::empty(std::size_t n) {
    return PartialAssignment(n, std::span<const std::pair<std::size_t, bool>>{});
}

std::vector<std::size_t> PartialAssignment::support() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < support_.size(); ++b) {
        std::uint64_t v = support_[b];
        while (v) {
            out.push_back(b * 64 + std::countr_zero(v) + 1);
            v &= v - 1;
        }
    }
    return out;
}

std::size_t PartialAssignment::support_size() const {
    std::size_t c = 0;
    for (std::uint64_t b : support_) c += std::popcount(b);
    return c;
}

std::size_t PartialAssignment::weight() const {
    std::size_t c = 0;
    for (std::uint64_t b : values_) c += std::popcount(b);
    return c;
}

bool PartialAssignment::defines(std::size_t pos) const {
    if (pos < 1 || pos > n_) return false;
    const auto [blk, mask] = locate(pos);
    return support_[blk] & mask;
}

bool PartialAssignment::value_at(std::size_t pos) const {
    if (!defines(pos)) {
        throw invalid_parameter("position " + std::to_string(pos) +
                                " is not in the support");
    }
    const auto [blk, mask] = locate(pos);
    return values_[blk] & mask;
}

std::vector<std::pair<std::size_t, bool>> PartialAssignment::entries() const {
    std::vector<std::pair<std::size_t, bool>> out;
    for (std::size_t pos : support()) out.emplace_back(pos, value_at(pos));
    return out;
}

PartialAssignment PartialAssignment::without(std::size_t pos) const {
    if (!defines(pos)) {
        throw invalid_parameter("position " + std::to_string(pos) +
                                " is not in the support");
    }
    auto support = support_;
    auto values = values_;
    const auto [blk, mask] = locate(pos);
    support[blk] &= ~mask;
    values[blk] &= ~mask;
    return PartialAssignment(n_, std::move(support), std::move(values));
}

PartialAssignment PartialAssignment::value_flipped(std::size_t pos) const {
    if (!defines(pos)) {
        throw invalid_parameter("position " + std::to_string(pos) +
                                " is not in the support");
    }
    auto values = values_;
    const auto [blk, mask] = locate(pos);
    values[blk] ^= mask;
    return PartialAssignment(n_, support_, std::move(values));
}

bool extends(const PartialAssignment& p, const Word& x) {
    if (p.ambient_size() != x.size()) {
        throw invalid_parameter("arity mismatch: assignment on " +
                                std::to_string(p.ambient_size()) +
                                " bits, word of " + std::to_string(x.size()));
    }
    const auto sup = p.support_blocks();
    const auto val = p.value_blocks();
    const auto bits = x.blocks();
    for (std::size_t b = 0; b < sup.size(); ++b) {
        if ((bits[b] & sup[b]) != val[b]) return false;
    }
    return true;
}

std::size_t PartialAssignmentHash::operator()(const PartialAssignment& p) const {
    std::size_t seed = p.ambient_size();
    for (std::uint64_t b : p.support_blocks()) hash_combine(seed, b);
    for (std::uint64_t b : p.value_blocks()) hash_combine(seed, b);
    return seed;
}

}  // namespace senslab
