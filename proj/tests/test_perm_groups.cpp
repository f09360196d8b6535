#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "senslab/errors.hpp"
#include "senslab/group.hpp"
#include "senslab/permutation.hpp"
#include "senslab/util.hpp"
#include "support/oracles.hpp"

using namespace senslab;

namespace {

Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<std::size_t> image(n);
    for (std::size_t i = 0; i < n; ++i) image[i] = i + 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const std::size_t j = i + uniform_below(rng, n - i);
        std::swap(image[i], image[j]);
    }
    return Permutation(std::move(image));
}

PartialAssignment random_assignment(std::size_t n, std::size_t k,
                                    std::mt19937_64& rng) {
    std::vector<std::size_t> positions(n);
    for (std::size_t i = 0; i < n; ++i) positions[i] = i + 1;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_below(rng, n - i);
        std::swap(positions[i], positions[j]);
    }
    std::vector<std::pair<std::size_t, bool>> entries;
    for (std::size_t i = 0; i < k; ++i) {
        entries.emplace_back(positions[i], uniform_below(rng, 2) == 1);
    }
    return PartialAssignment(n, entries);
}

/// All group elements by closure under composition (test-only; tiny degrees).
std::vector<Permutation> enumerate_group(const GeneratedGroup& group) {
    std::vector<Permutation> elements{Permutation::identity(group.degree())};
    std::size_t cursor = 0;
    while (cursor < elements.size()) {
        const Permutation current = elements[cursor++];
        for (const auto& g : group.generators()) {
            const Permutation next = g.after(current);
            bool known = false;
            for (const auto& e : elements) {
                if (e == next) known = true;
            }
            if (!known) elements.push_back(next);
        }
    }
    return elements;
}

}  // namespace

TEST_CASE("permutation validation and composition") {
    CHECK_THROWS_AS(Permutation({1, 1, 3}), invalid_parameter);
    CHECK_THROWS_AS(Permutation({0, 1}), invalid_parameter);

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 12);
        const Permutation p = random_permutation(n, rng);
        CHECK(p.after(p.inverse()).is_identity());
        CHECK(p.inverse().after(p).is_identity());
    }
}

TEST_CASE("shifting assignments moves values onto image positions") {
    const Permutation identity = Permutation::identity(5);
    std::mt19937_64 rng(22);
    const PartialAssignment p = random_assignment(5, 3, rng);
    CHECK(identity.apply(p) == p);

    const Permutation cycle = Permutation::full_cycle(4);
    const PartialAssignment q(
        4, std::vector<std::pair<std::size_t, bool>>{{1, true}, {2, false}});
    const PartialAssignment shifted = cycle.apply(q);
    CHECK(shifted ==
          PartialAssignment(4, std::vector<std::pair<std::size_t, bool>>{
                                   {2, true}, {3, false}}));
    CHECK(shifted.weight() == q.weight());

    // Action law: (pi after sigma) applied = pi applied to (sigma applied).
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + uniform_below(rng, 10);
        const std::size_t k = 1 + uniform_below(rng, n);
        const Permutation pi = random_permutation(n, rng);
        const Permutation sigma = random_permutation(n, rng);
        const PartialAssignment r = random_assignment(n, k, rng);
        CHECK(pi.after(sigma).apply(r) == pi.apply(sigma.apply(r)));
    }
}

TEST_CASE("transitivity detection") {
    for (std::size_t n = 1; n <= 64; ++n) {
        CHECK(is_transitive(cyclic_group(n)));
    }
    CHECK_FALSE(is_transitive(GeneratedGroup(3, {Permutation::identity(3)})));
    CHECK_FALSE(is_transitive(GeneratedGroup(3, {Permutation({2, 1, 3})})));
}

TEST_CASE("cyclic group generator") {
    CHECK(cyclic_group(4).generators().front().image() ==
          std::vector<std::size_t>{2, 3, 4, 1});
    CHECK(is_transitive(cyclic_group(1)));
}

TEST_CASE("assignment orbits under the cyclic group") {
    const PartialAssignment pair(
        4, std::vector<std::pair<std::size_t, bool>>{{1, true}, {2, true}});
    const auto orbit = assignment_orbit(cyclic_group(4), pair);
    REQUIRE(orbit.size() == 4);
    // Breadth-first from the pattern, one rotation per step.
    CHECK(orbit[0].support() == std::vector<std::size_t>{1, 2});
    CHECK(orbit[1].support() == std::vector<std::size_t>{2, 3});
    CHECK(orbit[2].support() == std::vector<std::size_t>{3, 4});
    CHECK(orbit[3].support() == std::vector<std::size_t>{1, 4});

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = 1 + uniform_below(rng, 16);
        const std::size_t k = 1 + uniform_below(rng, n);
        const PartialAssignment p = random_assignment(n, k, rng);
        const auto members = assignment_orbit(cyclic_group(n), p);
        CHECK(members.size() <= n);
        for (const auto& member : members) {
            CHECK(member.support_size() == p.support_size());
            CHECK(member.weight() == p.weight());
        }
    }
}

TEST_CASE("full-support orbits preserve weight under any transitive group") {
    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + uniform_below(rng, 6);
        const PartialAssignment p = random_assignment(n, n, rng);
        std::vector<Permutation> generators{Permutation::full_cycle(n),
                                            random_permutation(n, rng)};
        const GeneratedGroup group(n, std::move(generators));
        for (const auto& member : assignment_orbit(group, p)) {
            CHECK(member.support_size() == n);
            CHECK(member.weight() == p.weight());
        }
    }
}

TEST_CASE("orbit size divides the group order at small degree") {
    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + uniform_below(rng, 4);  // degree <= 5
        std::vector<Permutation> generators{random_permutation(n, rng),
                                            random_permutation(n, rng)};
        const GeneratedGroup group(n, generators);
        const std::size_t order = enumerate_group(group).size();
        const std::size_t k = 1 + uniform_below(rng, n);
        const auto orbit = assignment_orbit(group, random_assignment(n, k, rng));
        CHECK(order % orbit.size() == 0);
    }
}

TEST_CASE("orbit cap aborts oversized enumerations") {
    const GeneratedGroup tight(12, {Permutation::full_cycle(12)}, 5);
    const PartialAssignment p(
        12, std::vector<std::pair<std::size_t, bool>>{{1, true}});
    CHECK_THROWS_AS(assignment_orbit(tight, p), budget_exceeded);
}
