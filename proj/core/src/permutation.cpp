#include "senslab/permutation.hpp"

#include <numeric>
#include <string>

#include "senslab/errors.hpp"

namespace senslab {

Permutation::Permutation(std::vector<std::size_t> image)
    : image_(std::move(image)), inverse_(image_.size(), 0) {
    const std::size_t n = image_.size();
    if (n == 0) throw invalid_parameter("permutation degree must be at least 1");
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t v = image_[i];
        if (v < 1 || v > n) {
            throw invalid_parameter("image value " + std::to_string(v) +
                                    " out of range [1, " + std::to_string(n) +
                                    "]");
        }
        if (inverse_[v - 1] != 0) {
            throw invalid_parameter("image is not a bijection: value " +
                                    std::to_string(v) + " repeats");
        }
        inverse_[v - 1] = i + 1;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> image(n);
    std::iota(image.begin(), image.end(), std::size_t{1});
    return Permutation(std::move(image));
}

Permutation Permutation::full_cycle(std::size_t n) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 1; i <= n; ++i) image[i - 1] = i % n + 1;
    return Permutation(std::move(image));
}

std::size_t Permutation::map(std::size_t pos) const {
    if (pos < 1 || pos > degree()) {
        throw invalid_parameter("point " + std::to_string(pos) +
                                " out of range [1, " + std::to_string(degree()) +
                                "]");
    }
    return image_[pos - 1];
}

std::size_t Permutation::inverse_map(std::size_t pos) const {
    if (pos < 1 || pos > degree()) {
        throw invalid_parameter("point " + std::to_string(pos) +
                                " out of range [1, " + std::to_string(degree()) +
                                "]");
    }
    return inverse_[pos - 1];
}

Permutation Permutation::inverse() const { return Permutation(inverse_); }

Permutation Permutation::after(const Permutation& inner) const {
    if (degree() != inner.degree()) {
        throw invalid_parameter("degree mismatch in composition");
    }
    std::vector<std::size_t> image(degree());
    for (std::size_t i = 1; i <= degree(); ++i) {
        image[i - 1] = map(inner.map(i));
    }
    return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < degree(); ++i) {
        if (image_[i] != i + 1) return false;
    }
    return true;
}

bool Permutation::is_full_cycle() const {
    std::size_t pos = 1;
    std::size_t steps = 0;
    do {
        pos = image_[pos - 1];
        ++steps;
    } while (pos != 1 && steps <= degree());
    return steps == degree();
}

std::optional<std::size_t> Permutation::rotation_amount() const {
    const std::size_t n = degree();
    const std::size_t shift = (image_[0] + n - 1) % n;  // image of 1 is 1+shift
    for (std::size_t i = 1; i <= n; ++i) {
        if (image_[i - 1] != (i - 1 + shift) % n + 1) return std::nullopt;
    }
    return shift;
}

Word Permutation::apply(const Word& x) const {
    if (x.size() != degree()) {
        throw invalid_parameter("degree mismatch: permutation of degree " +
                                std::to_string(degree()) + ", word of " +
                                std::to_string(x.size()));
    }
    std::vector<std::size_t> ones;
    for (std::size_t pos : x.support()) ones.push_back(map(pos));
    return Word::from_support(x.size(), ones);
}

PartialAssignment Permutation::apply(const PartialAssignment& p) const {
    if (p.ambient_size() != degree()) {
        throw invalid_parameter("degree mismatch: permutation of degree " +
                                std::to_string(degree()) + ", assignment on " +
                                std::to_string(p.ambient_size()) + " bits");
    }
    std::vector<std::pair<std::size_t, bool>> entries;
    for (const auto& [pos, value] : p.entries()) {
        entries.emplace_back(map(pos), value);
    }
    return PartialAssignment(p.ambient_size(), entries);
}

}  // namespace senslab
