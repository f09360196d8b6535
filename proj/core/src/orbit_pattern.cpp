#include "senslab/orbit_pattern.hpp"

#include <numeric>
#include <string>

#include "senslab/errors.hpp"

namespace senslab {

namespace {

std::pair<std::uint64_t, std::uint64_t> index_masks_of(
    const PartialAssignment& p) {
    const std::size_t n = p.ambient_size();
    std::uint64_t support = 0;
    std::uint64_t values = 0;
    for (const auto& [pos, value] : p.entries()) {
        const std::uint64_t bit = std::uint64_t{1} << (n - pos);
        support |= bit;
        if (value) values |= bit;
    }
    return {support, values};
}

}  // namespace

namespace {
// The sliding fast path is valid only for groups generated by one rotation
// reaching every point, i.e. the full group of cyclic shifts.
bool is_rotation_group(const GeneratedGroup& group) {
    if (group.generators().size() != 1) return false;
    const auto shift = group.generators().front().rotation_amount();
    return shift.has_value() &&
           std::gcd(*shift, group.degree()) == 1;
}
}  // namespace

OrbitPattern::OrbitPattern(std::size_t n, PartialAssignment minterm,
                           GeneratedGroup group)
    : n_(n),
      minterm_(std::move(minterm)),
      group_(std::move(group)),
      cyclic_(is_rotation_group(group_)) {
    for (const auto& [pos, value] : minterm_.entries()) {
        probe_pos_.push_back(static_cast<std::uint32_t>(pos));
        probe_val_.push_back(value);
    }
    if (!cyclic_) {
        orbit_ = assignment_orbit(group_, minterm_);
    }
    if (n_ <= 63) {
        if (cyclic_) {
            PartialAssignment shifted = minterm_;
            const Permutation& step = group_.generators().front();
            for (std::size_t off = 0; off < n_; ++off) {
                index_masks_.push_back(index_masks_of(shifted));
                shifted = step.apply(shifted);
            }
        } else {
            for (const auto& member : *orbit_) {
                index_masks_.push_back(index_masks_of(member));
            }
        }
    }
}

bool OrbitPattern::match_at_offset(const Word& x, std::size_t offset) const {
    for (std::size_t t = 0; t < probe_pos_.size(); ++t) {
        std::size_t pos = probe_pos_[t] + offset;
        if (pos > n_) pos -= n_;
        if (x.bit(pos) != probe_val_[t]) return false;
    }
    return true;
}

bool OrbitPattern::evaluate(const Word& x) const {
    if (x.size() != n_) {
        throw invalid_parameter("arity mismatch: function on " +
                                std::to_string(n_) + " bits, word of " +
                                std::to_string(x.size()));
    }
    if (cyclic_) {
        for (std::size_t off = 0; off < n_; ++off) {
            if (match_at_offset(x, off)) return true;
        }
        return false;
    }
    for (const auto& member : *orbit_) {
        if (extends(member, x)) return true;
    }
    return false;
}

bool OrbitPattern::evaluate_index(std::uint64_t index) const {
    if (!index_masks_.empty()) {
        for (const auto& [support, values] : index_masks_) {
            if ((index & support) == values) return true;
        }
        return false;
    }
    return BooleanFunction::evaluate_index(index);
}

OrbitPattern minterm_closure(const PartialAssignment& p,
                             const GeneratedGroup& group, std::size_t n) {
    if (p.ambient_size() != n || group.degree() != n) {
        throw invalid_parameter("pattern, group, and arity must agree");
    }
    if (p.support_size() == 0) {
        throw invalid_parameter("the defining pattern needs nonempty support");
    }
    if (!is_transitive(group)) {
        throw invalid_parameter("the group must be transitive");
    }
    return OrbitPattern(n, p, group);
}

}  // namespace senslab
