#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bimodal/collection.hpp"
#include "bimodal/error.hpp"
#include "bimodal/group.hpp"

namespace bimodal {

/// Trichotomy on the number r of non-full sets (sets smaller than their
/// internal difference group).
enum class TrichotomyCase { r0, r1, r_ge2 };

constexpr std::string_view to_string(TrichotomyCase c) {
    switch (c) {
    case TrichotomyCase::r0: return "r0";
    case TrichotomyCase::r1: return "r1";
    case TrichotomyCase::r_ge2: return "r_ge2";
    }
    return "unknown";
}

struct SetStructure {
    std::int64_t size = 0;
    Subgroup internal_group;
    bool full = false; // size == |internal_group|
};

/// One coset together with the sets that tile it.
struct CosetTile {
    Element coset_rep;
    std::vector<std::size_t> set_indices;
};

/**
 * Full structural description of a bimodal collection.
 *
 * reorder lists original set indices with the non-full sets first (stable);
 * per_set stays in original label order. The meaning of the remaining fields
 * depends on the case:
 *
 *  - r_ge2: kernel is the common coset D = (a_i + H_i) \ A_i of the
 *    intersection of the star subgroups; sum_group is H = sum of the star
 *    subgroups; canonical_shift is min D; interior_sets are the sets that
 *    partition (shift + H) \ D; coset_tiling covers the remaining H-cosets.
 *  - r1: kernel is the subgroup D = sum of the full sets' internal groups;
 *    sum_group is H_1; canonical_shift is the least element u of the
 *    H_1-coset hull of the non-full set with u outside it; coset_tiling
 *    groups the full sets by the H_1-coset they tile.
 *  - r0: kernel is absent; sum_group is H = sum of all internal groups;
 *    canonical_shift is 0; coset_tiling groups all sets by H-coset.
 */
struct ClassificationReport {
    TrichotomyCase kind;
    std::size_t r = 0;
    std::vector<std::size_t> reorder;
    std::vector<SetStructure> per_set;
    std::optional<ElementSet> kernel;
    Subgroup sum_group;
    Element canonical_shift;
    std::vector<std::size_t> interior_sets;
    std::vector<CosetTile> coset_tiling;
};

namespace detail {

[[noreturn]] inline void violation(const std::string& what) {
    throw error(errc::theorem_violation, what);
}

inline std::vector<CosetTile> tile_by_coset(const SetCollection& c, const Subgroup& h,
                                            const std::vector<std::size_t>& set_indices) {
    std::map<Element, std::vector<std::size_t>> tiles;
    for (auto i : set_indices) tiles[coset_min(h, c.set(i).front())].push_back(i);
    std::vector<CosetTile> out;
    out.reserve(tiles.size());
    for (auto& [rep, members] : tiles) out.push_back(CosetTile{rep, std::move(members)});
    return out;
}

} // namespace detail

/**
 * Classify a bimodal collection into the r = 0 / r = 1 / r >= 2 trichotomy
 * and report the witnessing structure. Every structural claim in the report
 * is re-verified against the collection; a claim that fails to hold is a
 * bug somewhere upstream and raises a theorem-violation error rather than
 * returning silently. A collection that is not bimodal is refused with a
 * not-bimodal error carrying the profile witness.
 */
inline ClassificationReport classify(const SetCollection& c) {
    DefinitionVerdict verdict = is_bimodal_by_definition(c);
    if (!verdict.bimodal) {
        const ProfileWitness& w = *verdict.witness;
        throw error(errc::not_bimodal, "set " + std::to_string(w.set_index) + ", delta " + to_string(w.delta) +
                                           ": count " + std::to_string(w.count) + " is neither 0 nor the set size");
    }

    const GroupSpec& g = c.group();
    const std::size_t m = c.set_count();

    std::vector<SetStructure> per_set;
    per_set.reserve(m);
    std::vector<std::size_t> nonfull, full;
    for (std::size_t i = 0; i < m; ++i) {
        Subgroup h = internal_difference_group(c, i);
        const auto size = static_cast<std::int64_t>(c.set(i).size());
        const bool is_full = size == h.order();
        (is_full ? full : nonfull).push_back(i);
        per_set.push_back(SetStructure{size, std::move(h), is_full});
    }
    const std::size_t r = nonfull.size();
    std::vector<std::size_t> reorder = nonfull;
    reorder.insert(reorder.end(), full.begin(), full.end());

    if (r == 0) {
        std::vector<Subgroup> parts;
        parts.reserve(m);
        for (const auto& s : per_set) parts.push_back(s.internal_group);
        Subgroup h = subgroup_sum(parts);
        CosetDecomposition dec = coset_decompose(h, c.support());
        if (!dec.is_union)
            detail::violation("support is not a union of cosets of the summed internal groups (element " +
                              to_string(*dec.witness) + ")");
        std::vector<std::size_t> all(m);
        for (std::size_t i = 0; i < m; ++i) all[i] = i;
        std::vector<CosetTile> tiling = detail::tile_by_coset(c, h, all);
        return ClassificationReport{TrichotomyCase::r0, 0,            std::move(reorder),
                                    std::move(per_set), std::nullopt, std::move(h),
                                    g.zero(),           {},           std::move(tiling)};
    }

    if (r == 1) {
        const std::size_t i1 = nonfull.front();
        const Subgroup& h1 = per_set[i1].internal_group;
        for (auto j : full)
            if (!is_subset(per_set[j].internal_group.elements(), h1.elements()))
                detail::violation("internal group of full set " + std::to_string(j) +
                                  " is not contained in the non-full set's group");
        Subgroup d = Subgroup::trivial(g);
        if (!full.empty()) {
            std::vector<Subgroup> parts;
            for (auto j : full) parts.push_back(per_set[j].internal_group);
            d = subgroup_sum(parts);
        }
        if (!is_subset(d.elements(), h1.elements()))
            detail::violation("kernel subgroup is not contained in the non-full set's group");
        const ElementSet& a1 = c.set(i1);
        CosetDecomposition a1_dec = coset_decompose(d, a1);
        if (!a1_dec.is_union)
            detail::violation("non-full set is not a union of kernel cosets (element " +
                              to_string(*a1_dec.witness) + ")");
        ElementSet hull = coset(h1, a1.front());
        ElementSet rest = c.complement_of(i1);
        if (!set_intersection(hull, rest).empty())
            detail::violation("another set meets the non-full set's coset hull");
        CosetDecomposition rest_dec = coset_decompose(h1, rest);
        if (!rest_dec.is_union)
            detail::violation("complement of the non-full set is not a union of whole cosets (element " +
                              to_string(*rest_dec.witness) + ")");
        Element u = set_difference(hull, a1).front();
        ElementSet u_coset = coset(d, u);
        if (!set_intersection(u_coset, a1).empty())
            detail::violation("canonical shift's kernel coset meets the non-full set");
        std::vector<CosetTile> tiling = detail::tile_by_coset(c, h1, full);
        Subgroup h1_copy = h1;
        return ClassificationReport{TrichotomyCase::r1, 1,
                                    std::move(reorder), std::move(per_set),
                                    d.elements(),       std::move(h1_copy),
                                    std::move(u),       {},
                                    std::move(tiling)};
    }

    // r >= 2: a star of cosets a_i + H_i sharing the kernel coset D.
    std::vector<ElementSet> hulls;
    hulls.reserve(r);
    for (auto i : nonfull) hulls.push_back(coset(per_set[i].internal_group, c.set(i).front()));
    ElementSet d = set_difference(hulls.front(), c.set(nonfull.front()));
    for (std::size_t a = 1; a < r; ++a) {
        ElementSet da = set_difference(hulls[a], c.set(nonfull[a]));
        if (da != d)
            detail::violation("non-full sets " + std::to_string(nonfull.front()) + " and " +
                              std::to_string(nonfull[a]) + " disagree on the kernel");
    }
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = a + 1; b < r; ++b)
            if (set_intersection(hulls[a], hulls[b]) != d)
                detail::violation("coset hulls of non-full sets " + std::to_string(nonfull[a]) + " and " +
                                  std::to_string(nonfull[b]) + " do not intersect exactly in the kernel");
    for (std::size_t a = 0; a < r; ++a)
        for (std::size_t b = 0; b < r; ++b) {
            if (a == b) continue;
            if (is_subset(per_set[nonfull[a]].internal_group.elements(), per_set[nonfull[b]].internal_group.elements()))
                detail::violation("internal groups of non-full sets " + std::to_string(nonfull[a]) + " and " +
                                  std::to_string(nonfull[b]) + " are nested");
        }
    std::vector<Subgroup> star;
    star.reserve(r);
    for (auto i : nonfull) star.push_back(per_set[i].internal_group);
    Subgroup k = subgroup_intersect(star);
    if (d != coset(k, d.front()))
        detail::violation("kernel is not a coset of the intersection of the star subgroups");
    for (auto j : full)
        if (!is_subset(per_set[j].internal_group.elements(), k.elements()))
            detail::violation("internal group of full set " + std::to_string(j) +
                              " is not contained in the star intersection");
    Subgroup h = subgroup_sum(star);
    Element shift = d.front();
    ElementSet hull = coset(h, shift);
    ElementSet interior_target = set_difference(hull, d);
    if (!is_subset(interior_target, c.support()))
        detail::violation("the shifted sum group minus the kernel is not covered by the support");
    std::vector<std::size_t> interior, outer_sets;
    ElementSet interior_union;
    for (std::size_t i = 0; i < m; ++i) {
        ElementSet inside = set_intersection(c.set(i), hull);
        if (inside.empty()) {
            outer_sets.push_back(i);
        } else if (inside == c.set(i)) {
            interior.push_back(i);
            interior_union = set_union(interior_union, inside);
        } else {
            detail::violation("set " + std::to_string(i) + " straddles the boundary of the sum-group coset");
        }
    }
    if (interior_union != interior_target)
        detail::violation("sets inside the sum-group coset do not partition it minus the kernel");
    ElementSet outer = set_difference(c.support(), hull);
    CosetDecomposition outer_dec = coset_decompose(h, outer);
    if (!outer_dec.is_union)
        detail::violation("support outside the sum-group coset is not a union of whole cosets (element " +
                          to_string(*outer_dec.witness) + ")");
    std::vector<CosetTile> tiling = detail::tile_by_coset(c, h, outer_sets);
    return ClassificationReport{TrichotomyCase::r_ge2, r,
                                std::move(reorder),    std::move(per_set),
                                std::move(d),          std::move(h),
                                std::move(shift),      std::move(interior),
                                std::move(tiling)};
}

/**
 * Shift the collection into canonical position and report the shift that
 * was removed: classify, then translate by -canonical_shift. For r = 0 the
 * shift is 0 and the collection comes back unchanged.
 */
inline std::pair<SetCollection, Element> canonicalize(const SetCollection& c) {
    ClassificationReport report = classify(c);
    Element g = report.canonical_shift;
    if (g == c.group().zero()) return {c, g};
    return {c.shifted(c.group().neg(g)), g};
}

} // namespace bimodal
