#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "senslab/boolean_function.hpp"

namespace senslab {

/// Arity bound for dense representations. Operations that would enumerate
/// 2^n entries refuse larger arities instead of silently degrading.
inline constexpr std::size_t kDefaultDenseLimit = 24;

/// Dense representation of a Boolean function: one bit per word, indexed by
/// word value with position 1 as the most significant digit.
class TruthTable final : public BooleanFunction {
  public:
    /// Table from packed bits (entry i of the function at bit i of the
    /// packed layout). `bits` must hold exactly ceil(2^n / 64) blocks.
    TruthTable(std::size_t n, std::vector<std::uint64_t> bits,
               std::size_t dense_limit = kDefaultDenseLimit);

    /// Table from one character per entry ('0'/'1'), index-ordered.
    static TruthTable from_chars(std::size_t n, std::string_view entries,
                                 std::size_t dense_limit = kDefaultDenseLimit);

    std::size_t arity() const override { return n_; }
    std::uint64_t entry_count() const { return std::uint64_t{1} << n_; }

    bool at(std::uint64_t index) const {
        return (bits_[index >> 6] >> (index & 63)) & 1;
    }

    bool evaluate(const Word& x) const override;
    bool evaluate_index(std::uint64_t index) const override { return at(index); }

    std::string to_chars() const;

    friend bool operator==(const TruthTable& a, const TruthTable& b) {
        return a.n_ == b.n_ && a.bits_ == b.bits_;
    }

  private:
    std::size_t n_;
    std::vector<std::uint64_t> bits_;
};

/// Materializes f over all 2^n words (parallel across index ranges, with a
/// deterministic result). Fails when f.arity() exceeds dense_limit.
TruthTable build_truth_table(const BooleanFunction& f,
                             std::size_t dense_limit = kDefaultDenseLimit);

}  // namespace senslab
