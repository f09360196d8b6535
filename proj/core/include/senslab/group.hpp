#pragma once

#include <cstdint>
#include <vector>

#include "senslab/partial_assignment.hpp"
#include "senslab/permutation.hpp"

namespace senslab {

inline constexpr std::size_t kDefaultOrbitCap = 1'000'000;

/// A permutation group given by generators. Groups are never expanded into
/// element lists; every orbit question runs a breadth-first closure under
/// the generators, which suffices for finite groups.
class GeneratedGroup {
  public:
    GeneratedGroup(std::size_t degree, std::vector<Permutation> generators,
                   std::size_t orbit_cap = kDefaultOrbitCap);

    std::size_t degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    std::size_t orbit_cap() const { return orbit_cap_; }

  private:
    std::size_t degree_;
    std::vector<Permutation> generators_;
    std::size_t orbit_cap_;
};

/// The group generated by the full cycle i -> (i mod n) + 1.
GeneratedGroup cyclic_group(std::size_t n);

/// True iff the orbit of point 1 under the generators covers [1, n].
bool is_transitive(const GeneratedGroup& group);

/// The orbit {p^pi : pi in the group}, enumerated breadth-first from p with
/// generators applied in list order and a FIFO queue. The discovery order is
/// deterministic and downstream greedy procedures depend on it. Throws
/// budget_exceeded when the orbit would outgrow the group's orbit cap.
std::vector<PartialAssignment> assignment_orbit(const GeneratedGroup& group,
                                                const PartialAssignment& p);

}  // namespace senslab
