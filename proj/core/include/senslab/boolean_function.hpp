#pragma once

#include <cstdint>
#include <functional>

#include "senslab/word.hpp"

namespace senslab {

/// A total deterministic map {0,1}^n -> {0,1}. Implementations must be pure:
/// the same word always yields the same value, and evaluation from multiple
/// threads is safe.
class BooleanFunction {
  public:
    virtual ~BooleanFunction() = default;

    virtual std::size_t arity() const = 0;
    virtual bool evaluate(const Word& x) const = 0;

    /// Evaluation by word value with position 1 as the most significant
    /// digit. The default materializes a Word; dense-scan-heavy
    /// implementations override it. Requires arity <= 63.
    virtual bool evaluate_index(std::uint64_t index) const;
};

/// Adapter for ad-hoc evaluators (test oracles, composed predicates).
class CallbackFunction final : public BooleanFunction {
  public:
    CallbackFunction(std::size_t n, std::function<bool(const Word&)> fn)
        : n_(n), fn_(std::move(fn)) {}

    std::size_t arity() const override { return n_; }
    bool evaluate(const Word& x) const override { return fn_(x); }

  private:
    std::size_t n_;
    std::function<bool(const Word&)> fn_;
};

}  // namespace senslab
