#include "senslab/boolean_function.hpp"

namespace senslab {

bool BooleanFunction::evaluate_index(std::uint64_t index) const {
    return evaluate(Word::from_index(arity(), index));
}

}  // namespace senslab
