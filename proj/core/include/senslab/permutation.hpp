#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "senslab/partial_assignment.hpp"
#include "senslab/word.hpp"

namespace senslab {

/// A bijection of [1, n], stored in one-line image notation.
class Permutation {
  public:
    /// image[i - 1] is the image of point i; validated to be a bijection.
    explicit Permutation(std::vector<std::size_t> image);

    static Permutation identity(std::size_t n);

    /// The full cycle 1 -> 2 -> ... -> n -> 1.
    static Permutation full_cycle(std::size_t n);

    std::size_t degree() const { return image_.size(); }
    std::size_t map(std::size_t pos) const;
    std::size_t inverse_map(std::size_t pos) const;

    Permutation inverse() const;

    /// Composition: (*this after inner)(i) = this->map(inner.map(i)).
    Permutation after(const Permutation& inner) const;

    bool is_identity() const;

    /// True when the permutation is a single cycle through all n points.
    bool is_full_cycle() const;

    /// The shift amount j when this permutation is the rotation
    /// i -> ((i - 1 + j) mod n) + 1, otherwise nullopt.
    std::optional<std::size_t> rotation_amount() const;

    /// Relabeled word x^pi with (x^pi)(pi(i)) = x(i).
    Word apply(const Word& x) const;

    /// Shifted assignment p^pi with p^pi(pi(i)) = p(i); the support maps to
    /// its image set and the weight is preserved.
    PartialAssignment apply(const PartialAssignment& p) const;

    const std::vector<std::size_t>& image() const { return image_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;

  private:
    std::vector<std::size_t> image_;
    std::vector<std::size_t> inverse_;
};

}  // namespace senslab
