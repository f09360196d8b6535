#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace senslab {

/// A fixed-arity bit string. Positions are 1-based (1..n) throughout and a
/// word printed as a string lists position 1 first, so "1100" has ones at
/// positions 1 and 2. Words are immutable: every flip and rotation returns
/// a new value.
class Word {
  public:
    /// All-zeros word of arity n (n >= 1).
    explicit Word(std::size_t n);

    /// Parses "0101..." (position 1 is the first character).
    static Word from_bits(std::string_view bits);

    /// Word with ones exactly at `ones` (1-based positions, duplicates allowed).
    static Word from_support(std::size_t n, std::span<const std::size_t> ones);

    /// Word whose bit at position i equals bit (n - i) of `index`, i.e.
    /// position 1 is the most significant digit. Requires n <= 63.
    static Word from_index(std::size_t n, std::uint64_t index);

    std::size_t size() const { return n_; }
    bool bit(std::size_t pos) const;

    /// Inverse of from_index; requires n <= 63.
    std::uint64_t to_index() const;

    Word flipped(std::size_t pos) const;
    Word flipped(std::span<const std::size_t> block) const;

    /// Cyclic shift by `amount` positions: result position j holds the input
    /// bit at position ((j - 1 + amount) mod n) + 1, so the first `amount`
    /// bits rotate to the back. Any amount is reduced mod n.
    Word rotated(std::size_t amount) const;

    /// Positions carrying a 1, ascending.
    std::vector<std::size_t> support() const;
    std::size_t weight() const;

    std::string to_string() const;

    std::span<const std::uint64_t> blocks() const { return blocks_; }

    friend bool operator==(const Word&, const Word&) = default;

  private:
    std::size_t n_;
    std::vector<std::uint64_t> blocks_;  // bit (pos - 1) of the packed layout

    void set_bit(std::size_t pos);
    void check_pos(std::size_t pos) const;
};

}  // namespace senslab
