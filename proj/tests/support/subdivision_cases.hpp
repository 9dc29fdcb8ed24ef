#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bimodal/construct.hpp"
#include "bimodal/group.hpp"

namespace testutil {

/// Groups of order <= 24 used for randomized construction checks.
inline const std::vector<bimodal::GroupSpec>& small_groups() {
    static const std::vector<bimodal::GroupSpec> groups = {
        bimodal::GroupSpec::cyclic(6),  bimodal::GroupSpec::cyclic(8),  bimodal::GroupSpec::cyclic(9),
        bimodal::GroupSpec::cyclic(10), bimodal::GroupSpec::cyclic(12), bimodal::GroupSpec::cyclic(15),
        bimodal::GroupSpec::cyclic(16), bimodal::GroupSpec::cyclic(18), bimodal::GroupSpec::cyclic(20),
        bimodal::GroupSpec::cyclic(24), bimodal::GroupSpec({2, 4}),     bimodal::GroupSpec({3, 3}),
        bimodal::GroupSpec({2, 2, 2}),  bimodal::GroupSpec({2, 6}),     bimodal::GroupSpec({4, 4}),
        bimodal::GroupSpec({2, 2, 4}),  bimodal::GroupSpec({2, 10}),    bimodal::GroupSpec({2, 12}),
        bimodal::GroupSpec({3, 6}),     bimodal::GroupSpec({2, 2, 2, 2})};
    return groups;
}

/// One randomly generated, valid subdivision instance: a coset collection
/// with one set replaced by a random partition of it into full cosets of
/// subgroups of its internal difference group.
inline bimodal::SetCollection random_subdivision(std::mt19937& rng) {
    using namespace bimodal;
    const auto& groups = small_groups();
    const GroupSpec& g = groups[rng() % groups.size()];

    std::vector<Subgroup> lattice = all_subgroups(g);
    std::vector<Subgroup> nontrivial;
    for (const auto& h : lattice)
        if (h.order() >= 2) nontrivial.push_back(h);
    const Subgroup& h = nontrivial[rng() % nontrivial.size()];

    // choose a nonempty random set of distinct cosets of h
    CosetDecomposition all = coset_decompose(h, ElementSet(g.elements()));
    std::vector<Element> reps;
    for (const auto& rep : all.representatives)
        if (rng() % 2 == 0) reps.push_back(rep);
    if (reps.empty()) reps.push_back(all.representatives[rng() % all.representatives.size()]);
    SetCollection base = construct_cosets(h, reps);

    const std::size_t target = rng() % base.set_count();

    // carve the target coset into cosets of random subgroups of h
    std::vector<Subgroup> inside;
    for (const auto& j : lattice)
        if (is_subset(j.elements(), h.elements())) inside.push_back(j);
    ElementSet remaining = base.set(target);
    std::vector<std::vector<Element>> parts;
    while (!remaining.empty()) {
        const Element& x = remaining[rng() % remaining.size()];
        std::vector<const Subgroup*> fits;
        for (const auto& j : inside)
            if (is_subset(coset(j, x), remaining)) fits.push_back(&j);
        const Subgroup& j = *fits[rng() % fits.size()];
        ElementSet part = coset(j, x);
        remaining = set_difference(remaining, part);
        parts.emplace_back(part.begin(), part.end());
    }
    return subdivide(base, target, parts);
}

} // namespace testutil
