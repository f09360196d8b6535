#include "senslab/group.hpp"

#include <deque>
#include <string>
#include <unordered_set>

#include "senslab/errors.hpp"

namespace senslab {

GeneratedGroup::GeneratedGroup(std::size_t degree,
                               std::vector<Permutation> generators,
                               std::size_t orbit_cap)
    : degree_(degree), generators_(std::move(generators)), orbit_cap_(orbit_cap) {
    if (degree == 0) throw invalid_parameter("group degree must be at least 1");
    if (generators_.empty()) {
        throw invalid_parameter("a generated group needs at least one generator");
    }
    for (const auto& g : generators_) {
        if (g.degree() != degree) {
            throw invalid_parameter("generator degree " +
                                    std::to_string(g.degree()) +
                                    " does not match group degree " +
                                    std::to_string(degree));
        }
    }
}

GeneratedGroup cyclic_group(std::size_t n) {
    std::vector<Permutation> generators;
    generators.push_back(Permutation::full_cycle(n));
    return GeneratedGroup(n, std::move(generators));
}

bool is_transitive(const GeneratedGroup& group) {
    const std::size_t n = group.degree();
    std::vector<bool> seen(n + 1, false);
    std::deque<std::size_t> queue;
    seen[1] = true;
    queue.push_back(1);
    std::size_t reached = 1;
    while (!queue.empty() && reached < n) {
        const std::size_t point = queue.front();
        queue.pop_front();
        for (const auto& g : group.generators()) {
            const std::size_t next = g.map(point);
            if (!seen[next]) {
                seen[next] = true;
                ++reached;
                queue.push_back(next);
            }
        }
    }
    return reached == n;
}

std::vector<PartialAssignment> assignment_orbit(const GeneratedGroup& group,
                                                const PartialAssignment& p) {
    if (p.ambient_size() != group.degree()) {
        throw invalid_parameter("degree mismatch: group of degree " +
                                std::to_string(group.degree()) +
                                ", assignment on " +
                                std::to_string(p.ambient_size()) + " bits");
    }
    std::vector<PartialAssignment> orbit;
    std::unordered_set<PartialAssignment, PartialAssignmentHash> seen;
    std::deque<std::size_t> queue;  // indices into orbit

    orbit.push_back(p);
    seen.insert(p);
    queue.push_back(0);
    while (!queue.empty()) {
        const std::size_t at = queue.front();
        queue.pop_front();
        for (const auto& g : group.generators()) {
            PartialAssignment next = g.apply(orbit[at]);
            if (seen.contains(next)) continue;
            if (orbit.size() >= group.orbit_cap()) {
                throw budget_exceeded(
                    "orbit exceeds the cap of " +
                    std::to_string(group.orbit_cap()) +
                    " assignments; the group is too large for explicit orbit "
                    "methods");
            }
            seen.insert(next);
            orbit.push_back(std::move(next));
            queue.push_back(orbit.size() - 1);
        }
    }
    return orbit;
}

}  // namespace senslab
