#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "senslab/word.hpp"

namespace senslab {

/// A 0/1 labeling of a support set S within [1, n]. The support is kept in
/// canonical (bit-packed) form, so two assignments compare equal exactly when
/// they have the same ambient arity, support, and values.
class PartialAssignment {
  public:
    /// Assignment from (position, value) pairs; positions must be distinct
    /// and within [1, n].
    PartialAssignment(std::size_t n,
                      std::span<const std::pair<std::size_t, bool>> entries);

    static PartialAssignment empty(std::size_t n);

    std::size_t ambient_size() const { return n_; }

    /// Support positions, ascending.
    std::vector<std::size_t> support() const;
    std::size_t support_size() const;

    /// Number of support positions mapped to 1.
    std::size_t weight() const;

    bool defines(std::size_t pos) const;
    bool value_at(std::size_t pos) const;  // requires defines(pos)

    /// (position, value) pairs in ascending position order.
    std::vector<std::pair<std::size_t, bool>> entries() const;

    /// Assignment with one support position removed.
    PartialAssignment without(std::size_t pos) const;

    /// Assignment with the value at one support position flipped.
    PartialAssignment value_flipped(std::size_t pos) const;

    std::span<const std::uint64_t> support_blocks() const { return support_; }
    std::span<const std::uint64_t> value_blocks() const { return values_; }

    friend bool operator==(const PartialAssignment&,
                           const PartialAssignment&) = default;

  private:
    std::size_t n_;
    std::vector<std::uint64_t> support_;
    std::vector<std::uint64_t> values_;  // subset of support_

    PartialAssignment(std::size_t n, std::vector<std::uint64_t> support,
                      std::vector<std::uint64_t> values);
};

/// True iff x agrees with p on p's entire support (p is then extended by x).
bool extends(const PartialAssignment& p, const Word& x);

struct PartialAssignmentHash {
    std::size_t operator()(const PartialAssignment& p) const;
};

}  // namespace senslab
