#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bimodal/collection.hpp"
#include "bimodal/error.hpp"
#include "bimodal/group.hpp"

namespace bimodal {

/// Collection of pairwise distinct cosets of one subgroup. The sets keep the
/// order the representatives were given in.
inline SetCollection construct_cosets(const Subgroup& h, const std::vector<Element>& reps) {
    std::vector<std::vector<Element>> sets;
    ElementSet mins;
    for (const auto& rep : reps) {
        Element key = coset_min(h, rep);
        if (set_contains(mins, key))
            throw error(errc::duplicate_coset, "representative " + to_string(rep) + " repeats an earlier coset");
        mins = set_union(mins, ElementSet{key});
        sets.push_back(coset(h, rep));
    }
    return SetCollection(h.ambient(), std::move(sets));
}

/// Collection {H_i \ {0}} for subgroups whose punctured sets partition the
/// nonzero elements of the group. Each subgroup must have more than two
/// elements of its own.
inline SetCollection construct_group_partition(const GroupSpec& g, const std::vector<Subgroup>& subgroups) {
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (!(subgroups[i].ambient() == g))
            throw error(errc::ambient_mismatch, "subgroup " + std::to_string(i) + " has a different ambient group");
        if (subgroups[i].order() <= 2)
            throw error(errc::index_condition, "subgroup " + std::to_string(i) + " has only " +
                                                   std::to_string(subgroups[i].order() - 1) +
                                                   " nonzero element(s); more than one is required");
    }
    std::vector<std::vector<Element>> sets;
    ElementSet covered;
    const Element zero = g.zero();
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        ElementSet starred = set_difference(subgroups[i].elements(), ElementSet{zero});
        for (const auto& x : starred)
            if (set_contains(covered, x))
                throw error(errc::not_a_partition,
                            "element " + to_string(x) + " lies in more than one subgroup");
        covered = set_union(covered, starred);
        sets.emplace_back(starred.begin(), starred.end());
    }
    if (static_cast<std::int64_t>(covered.size()) != g.order() - 1) {
        for (const auto& x : g.elements())
            if (x != zero && !set_contains(covered, x))
                throw error(errc::not_a_partition, "element " + to_string(x) + " is covered by no subgroup");
    }
    return SetCollection(g, std::move(sets));
}

/// Like construct_group_partition but without the size floor and without
/// requiring full coverage: elements missed by every punctured subgroup are
/// appended as singleton sets in canonical order.
inline SetCollection construct_mixed_partition(const GroupSpec& g, const std::vector<Subgroup>& subgroups) {
    std::vector<std::vector<Element>> sets;
    ElementSet covered;
    const Element zero = g.zero();
    for (std::size_t i = 0; i < subgroups.size(); ++i) {
        if (!(subgroups[i].ambient() == g))
            throw error(errc::ambient_mismatch, "subgroup " + std::to_string(i) + " has a different ambient group");
        if (subgroups[i].order() == 1)
            throw error(errc::empty_set, "subgroup " + std::to_string(i) + " is trivial and contributes no set");
        ElementSet starred = set_difference(subgroups[i].elements(), ElementSet{zero});
        for (const auto& x : starred)
            if (set_contains(covered, x))
                throw error(errc::not_disjoint, "element " + to_string(x) + " lies in more than one subgroup");
        covered = set_union(covered, starred);
        sets.emplace_back(starred.begin(), starred.end());
    }
    for (const auto& x : g.elements())
        if (x != zero && !set_contains(covered, x)) sets.push_back({x});
    return SetCollection(g, std::move(sets));
}

/// Translate every set by the same element. Labels, and the bimodality
/// verdict, are preserved.
inline SetCollection shift(const SetCollection& c, const Element& by) { return c.shifted(by); }

/**
 * Replace set `index` of a bimodal collection by a partition of it into
 * parts that are each full cosets of their own internal difference group.
 * The set being replaced must itself be a full coset, and the result keeps
 * the surrounding sets in place.
 */
inline SetCollection subdivide(const SetCollection& c, std::size_t index,
                               const std::vector<std::vector<Element>>& parts) {
    const ElementSet& target = c.set(index); // throws index_out_of_range
    DefinitionVerdict verdict = is_bimodal_by_definition(c);
    if (!verdict.bimodal)
        throw error(errc::not_bimodal, "collection to subdivide is not bimodal (set " +
                                           std::to_string(verdict.witness->set_index) + ", delta " +
                                           to_string(verdict.witness->delta) + ")");
    Subgroup h = internal_difference_group(c, index);
    if (static_cast<std::int64_t>(target.size()) != h.order())
        throw error(errc::subdivision_hypothesis,
                    "set " + std::to_string(index) + " is not a full coset of its internal difference group");
    ElementSet covered;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        ElementSet part = make_set(parts[p]);
        if (part.empty())
            throw error(errc::not_a_partition, "part " + std::to_string(p) + " is empty");
        if (part.size() != parts[p].size() || !set_intersection(covered, part).empty())
            throw error(errc::not_a_partition, "part " + std::to_string(p) + " overlaps another part");
        if (!is_subset(part, target))
            throw error(errc::not_a_partition,
                        "part " + std::to_string(p) + " contains elements outside the subdivided set");
        covered = set_union(covered, part);
        Subgroup hp = internal_difference_group(c.group(), part);
        if (static_cast<std::int64_t>(part.size()) != hp.order())
            throw error(errc::subdivision_hypothesis,
                        "part " + std::to_string(p) + " is not a full coset of its internal difference group");
    }
    if (covered != target)
        throw error(errc::not_a_partition, "parts do not cover the subdivided set");
    std::vector<std::vector<Element>> sets;
    for (std::size_t i = 0; i < c.set_count(); ++i) {
        if (i == index) {
            for (const auto& p : parts) sets.emplace_back(p.begin(), p.end());
        } else {
            sets.emplace_back(c.set(i).begin(), c.set(i).end());
        }
    }
    return SetCollection(c.group(), std::move(sets));
}

/**
 * Blueprint for a star collection: t >= 2 subgroups meeting pairwise in the
 * kernel subgroup, plus representatives for the cosets of the kernel that
 * tile the rest of the summed subgroup, plus (optionally) representatives of
 * further whole cosets of the sum to cover outside it.
 */
struct StarSpec {
    std::vector<Subgroup> subgroups;
    Subgroup kernel;
    std::vector<Element> interior_coset_reps;
    std::vector<Element> outer_coset_reps;
};

/**
 * Build the canonical-position star: sets H_i \ D for each star subgroup,
 * then the interior kernel-cosets (sorted by representative), then the
 * outer cosets of the sum subdivided into kernel-cosets. The result has
 * exactly the star subgroups as its non-full internal groups.
 */
inline SetCollection construct_star(const StarSpec& spec) {
    const std::size_t t = spec.subgroups.size();
    if (t < 2) throw error(errc::not_a_star, "a star needs at least two subgroups, got " + std::to_string(t));
    const GroupSpec& g = spec.kernel.ambient();
    for (std::size_t i = 0; i < t; ++i) {
        if (!(spec.subgroups[i].ambient() == g))
            throw error(errc::ambient_mismatch, "subgroup " + std::to_string(i) + " has a different ambient group");
        if (!is_subset(spec.kernel.elements(), spec.subgroups[i].elements()))
            throw error(errc::not_a_star,
                        "kernel is not contained in subgroup " + std::to_string(i));
        if (spec.subgroups[i].order() / spec.kernel.order() <= 2)
            throw error(errc::index_condition, "subgroup " + std::to_string(i) +
                                                   " has index <= 2 over the kernel");
    }
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j)
            if (set_intersection(spec.subgroups[i].elements(), spec.subgroups[j].elements()) !=
                spec.kernel.elements())
                throw error(errc::not_a_star, "subgroups " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " do not intersect exactly in the kernel");
    Subgroup h = subgroup_sum(spec.subgroups);

    std::vector<std::vector<Element>> sets;
    ElementSet star_union;
    for (const auto& hi : spec.subgroups) {
        ElementSet a = set_difference(hi.elements(), spec.kernel.elements());
        star_union = set_union(star_union, hi.elements());
        sets.emplace_back(a.begin(), a.end());
    }

    ElementSet interior_target = set_difference(h.elements(), star_union);
    std::map<Element, ElementSet> interior;
    for (const auto& rep : spec.interior_coset_reps) {
        g.require_valid(rep);
        if (!h.contains(rep))
            throw error(errc::interior_tiling, "representative " + to_string(rep) + " is outside the summed subgroup");
        for (std::size_t i = 0; i < t; ++i)
            if (spec.subgroups[i].contains(rep))
                throw error(errc::interior_tiling,
                            "representative " + to_string(rep) + " lies inside star subgroup " + std::to_string(i));
        Element key = coset_min(spec.kernel, rep);
        if (interior.count(key))
            throw error(errc::duplicate_coset, "representative " + to_string(rep) + " repeats an interior coset");
        interior.emplace(key, coset(spec.kernel, rep));
    }
    ElementSet interior_union;
    for (const auto& [key, cs] : interior) interior_union = set_union(interior_union, cs);
    if (interior_union != interior_target) {
        ElementSet missing = set_difference(interior_target, interior_union);
        if (!missing.empty())
            throw error(errc::interior_tiling,
                        "interior element " + to_string(missing.front()) + " is covered by no representative");
        throw error(errc::interior_tiling, "interior representatives spill outside the target region");
    }
    for (const auto& [key, cs] : interior) sets.emplace_back(cs.begin(), cs.end());

    std::map<Element, ElementSet> outer;
    for (const auto& rep : spec.outer_coset_reps) {
        g.require_valid(rep);
        if (h.contains(rep))
            throw error(errc::duplicate_coset,
                        "outer representative " + to_string(rep) + " lies inside the summed subgroup");
        Element key = coset_min(h, rep);
        if (outer.count(key))
            throw error(errc::duplicate_coset, "outer representative " + to_string(rep) + " repeats a coset");
        outer.emplace(key, coset(h, rep));
    }
    for (const auto& [key, cs] : outer) {
        CosetDecomposition dec = coset_decompose(spec.kernel, cs);
        for (const auto& rep : dec.representatives) {
            ElementSet part = coset(spec.kernel, rep);
            sets.emplace_back(part.begin(), part.end());
        }
    }
    return SetCollection(g, std::move(sets));
}

/// One coset rep + J of the tiling handed to construct_r1.
struct TilingPart {
    Subgroup subgroup;
    Element rep;
};

/**
 * Build a collection whose only non-full set is a1: the base set must be a
 * proper subset of h1 generating it, and the remaining sets are cosets of
 * subgroups J for which a1 is itself a union of J-cosets. Those cosets must
 * avoid h1 and together cover whole h1-cosets.
 */
inline SetCollection construct_r1(const GroupSpec& g, const Subgroup& h1, const std::vector<Element>& a1_in,
                                  const std::vector<TilingPart>& tiling) {
    if (!(h1.ambient() == g)) throw error(errc::ambient_mismatch, "h1 has a different ambient group");
    ElementSet a1 = make_set(a1_in);
    if (a1.empty()) throw error(errc::empty_set, "a1 is empty");
    for (const auto& x : a1) g.require_valid(x);
    if (!is_subset(a1, h1.elements()) || a1 == h1.elements())
        throw error(errc::invalid_argument, "a1 must be a proper subset of h1");
    Subgroup generated = internal_difference_group(g, a1);
    if (!(generated == h1))
        throw error(errc::generation, "differences of a1 generate a subgroup of order " +
                                          std::to_string(generated.order()) + ", not h1");

    std::vector<Subgroup> admissible;
    for (const auto& j : all_subgroups(g))
        if (coset_decompose(j, a1).is_union) admissible.push_back(j);

    std::vector<std::vector<Element>> sets;
    sets.emplace_back(a1.begin(), a1.end());
    ElementSet covered;
    for (std::size_t tno = 0; tno < tiling.size(); ++tno) {
        const TilingPart& part = tiling[tno];
        if (!(part.subgroup.ambient() == g))
            throw error(errc::ambient_mismatch, "tiling part " + std::to_string(tno) +
                                                    " has a different ambient group");
        bool ok = false;
        for (const auto& j : admissible)
            if (j.elements() == part.subgroup.elements()) ok = true;
        if (!ok)
            throw error(errc::tiling_subgroup, "tiling part " + std::to_string(tno) +
                                                   ": a1 is not a union of cosets of its subgroup");
        ElementSet cs = coset(part.subgroup, part.rep);
        if (!set_intersection(cs, covered).empty())
            throw error(errc::tiling, "tiling part " + std::to_string(tno) + " overlaps an earlier part");
        if (!set_intersection(cs, h1.elements()).empty())
            throw error(errc::tiling, "tiling part " + std::to_string(tno) + " meets h1");
        covered = set_union(covered, cs);
        sets.emplace_back(cs.begin(), cs.end());
    }
    CosetDecomposition dec = coset_decompose(h1, covered);
    if (!dec.is_union)
        throw error(errc::tiling, "tiling does not cover whole h1-cosets (element " +
                                      to_string(*dec.witness) + " is stranded)");
    return SetCollection(g, std::move(sets));
}

} // namespace bimodal
