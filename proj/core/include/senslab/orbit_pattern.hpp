#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "senslab/boolean_function.hpp"
#include "senslab/group.hpp"
#include "senslab/partial_assignment.hpp"

namespace senslab {

/// The closure of a single pattern under a transitive group: evaluates to 1
/// on x exactly when some group shift of the defining pattern is extended by
/// x. The defining pattern is a minterm of the function, and the function is
/// invariant under every group element.
///
/// When the group is generated by a single full cycle the orbit is the set of
/// cyclic shifts and evaluation slides the pattern across all n offsets
/// without materializing anything. Other groups get their orbit materialized
/// once at construction (subject to the group's orbit cap).
class OrbitPattern final : public BooleanFunction {
  public:
    std::size_t arity() const override { return n_; }
    bool evaluate(const Word& x) const override;
    bool evaluate_index(std::uint64_t index) const override;

    const PartialAssignment& minterm() const { return minterm_; }
    const GeneratedGroup& group() const { return group_; }
    bool is_cyclic() const { return cyclic_; }

    /// The materialized orbit for non-cyclic groups; empty optional when the
    /// cyclic fast path is active (enumerate via assignment_orbit if needed).
    const std::optional<std::vector<PartialAssignment>>& cached_orbit() const {
        return orbit_;
    }

  private:
    friend OrbitPattern minterm_closure(const PartialAssignment& p,
                                        const GeneratedGroup& group,
                                        std::size_t n);

    OrbitPattern(std::size_t n, PartialAssignment minterm, GeneratedGroup group);

    bool match_at_offset(const Word& x, std::size_t offset) const;

    std::size_t n_;
    PartialAssignment minterm_;
    GeneratedGroup group_;
    bool cyclic_;
    std::optional<std::vector<PartialAssignment>> orbit_;

    // Cyclic fast path: support positions and values of the minterm, sorted.
    std::vector<std::uint32_t> probe_pos_;
    std::vector<bool> probe_val_;

    // Index-space masks (position i at bit n - i), one per orbit member or
    // per cyclic offset; built when n <= 63 to serve dense table builds.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> index_masks_;
};

/// Builds p^G. Preconditions: the group is transitive (checked), degrees
/// match n, and the pattern has nonempty support.
OrbitPattern minterm_closure(const PartialAssignment& p,
                             const GeneratedGroup& group, std::size_t n);

}  // namespace senslab
