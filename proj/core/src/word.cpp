#include "senslab/word.hpp"

#include <bit>

#include "senslab/errors.hpp"

namespace senslab {

namespace {
std::size_t block_count(std::size_t n) { return (n + 63) / 64; }
}  // namespace

Word::Word(std::size_t n) : n_(n), blocks_(block_count(n), 0) {
    if (n == 0) throw invalid_parameter("word arity must be at least 1");
}

void Word::check_pos(std::size_t pos) const {
    if (pos < 1 || pos > n_) {
        throw invalid_parameter("position " + std::to_string(pos) +
                                " out of range [1, " + std::to_string(n_) + "]");
    }
}

void Word::set_bit(std::size_t pos) {
    blocks_[(pos - 1) >> 6] |= std::uint64_t{1} << ((pos - 1) & 63);
}

Word Word::from_bits(std::string_view bits) {
    Word w(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            w.set_bit(i + 1);
        } else if (bits[i] != '0') {
            throw invalid_parameter("word strings may contain only 0 and 1");
        }
    }
    return w;
}

Word Word::from_support(std::size_t n, std::span<const std::size_t> ones) {
    Word w(n);
    for (std::size_t pos : ones) {
        w.check_pos(pos);
        w.set_bit(pos);
    }
    return w;
}

Word Word::from_index(std::size_t n, std::uint64_t index) {
    if (n > 63) throw invalid_parameter("index form requires arity <= 63");
    Word w(n);
    if (index >= (std::uint64_t{1} << n)) {
        throw invalid_parameter("index exceeds 2^n");
    }
    for (std::size_t pos = 1; pos <= n; ++pos) {
        if ((index >> (n - pos)) & 1) w.set_bit(pos);
    }
    return w;
}

bool Word::bit(std::size_t pos) const {
    check_pos(pos);
    return (blocks_[(pos - 1) >> 6] >> ((pos - 1) & 63)) & 1;
}

std::uint64_t Word::to_index() const {
    if (n_ > 63) throw invalid_parameter("index form requires arity <= 63");
    std::uint64_t index = 0;
    for (std::size_t pos = 1; pos <= n_; ++pos) {
        index = (index << 1) | static_cast<std::uint64_t>(bit(pos));
    }
    return index;
}

Word Word::flipped(std::size_t pos) const {
    check_pos(pos);
    Word w(*this);
    w.blocks_[(pos - 1) >> 6] ^= std::uint64_t{1} << ((pos - 1) & 63);
    return w;
}

Word Word::flipped(std::span<const std::size_t> block) const {
    Word mask(n_);
    for (std::size_t pos : block) {
        check_pos(pos);
        mask.set_bit(pos);  // set, not xor: duplicate positions flip once
    }
    Word w(*this);
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        w.blocks_[b] ^= mask.blocks_[b];
    }
    return w;
}

Word Word::rotated(std::size_t amount) const {
    amount %= n_;
    if (amount == 0) return *this;
    Word w(n_);
    for (std::size_t pos = 1; pos <= n_; ++pos) {
        std::size_t src = pos + amount;
        if (src > n_) src -= n_;
        if (bit(src)) w.set_bit(pos);
    }
    return w;
}

std::vector<std::size_t> Word::support() const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        std::uint64_t v = blocks_[b];
        while (v) {
            const int low = std::countr_zero(v);
            out.push_back(b * 64 + low + 1);
            v &= v - 1;
        }
    }
    return out;
}

std::size_t Word::weight() const {
    std::size_t w = 0;
    for (std::uint64_t b : blocks_) w += std::popcount(b);
    return w;
}

std::string Word::to_string() const {
    std::string s(n_, '0');
    for (std::size_t pos = 1; pos <= n_; ++pos) {
        if (bit(pos)) s[pos - 1] = '1';
    }
    return s;
}

}  // namespace senslab
