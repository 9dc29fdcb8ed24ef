#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bimodal/error.hpp"
#include "bimodal/group.hpp"

namespace bimodal {

/**
 * Non-empty labelled list of non-empty, pairwise disjoint subsets of one
 * ambient group: the object the whole library is about. Sets keep their
 * order (labels are positions); elements within a set are kept in canonical
 * order. The union of the sets is the support.
 */
class SetCollection {
public:
    SetCollection(GroupSpec group, std::vector<std::vector<Element>> sets)
        : group_(std::move(group)) {
        if (sets.empty()) throw error(errc::empty_set, "collection needs at least one set");
        sets_.reserve(sets.size());
        ElementSet seen;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            for (const auto& x : sets[i]) {
                if (!group_.valid(x))
                    throw error(errc::invalid_element,
                                "set " + std::to_string(i) + ": element " + to_string(x) + " is not in the group");
            }
            ElementSet s = make_set(std::move(sets[i]));
            if (s.empty()) throw error(errc::empty_set, "set " + std::to_string(i) + " is empty");
            for (const auto& x : s)
                if (set_contains(seen, x))
                    throw error(errc::not_disjoint,
                                "set " + std::to_string(i) + ": element " + to_string(x) +
                                    " already belongs to an earlier set");
            seen = set_union(seen, s);
            sets_.push_back(std::move(s));
        }
        support_ = std::move(seen);
    }

    [[nodiscard]] const GroupSpec& group() const { return group_; }
    [[nodiscard]] std::size_t set_count() const { return sets_.size(); }
    [[nodiscard]] const std::vector<ElementSet>& sets() const { return sets_; }

    [[nodiscard]] const ElementSet& set(std::size_t i) const {
        if (i >= sets_.size())
            throw error(errc::index_out_of_range, "set index " + std::to_string(i) + " out of range");
        return sets_[i];
    }

    /// Union of all sets.
    [[nodiscard]] const ElementSet& support() const { return support_; }

    /// Everything in the support that is not in set i.
    [[nodiscard]] ElementSet complement_of(std::size_t i) const { return set_difference(support_, set(i)); }

    /// The collection translated by g, labels preserved.
    [[nodiscard]] SetCollection shifted(const Element& g) const {
        group_.require_valid(g);
        std::vector<std::vector<Element>> moved;
        moved.reserve(sets_.size());
        for (const auto& s : sets_) {
            std::vector<Element> t;
            t.reserve(s.size());
            for (const auto& x : s) t.push_back(group_.add(x, g));
            moved.push_back(std::move(t));
        }
        return SetCollection(group_, std::move(moved));
    }

    bool operator==(const SetCollection&) const = default;

private:
    GroupSpec group_;
    std::vector<ElementSet> sets_;
    ElementSet support_;
};

/**
 * For each set index i and each nonzero delta, how many ordered pairs (a, b)
 * with a in A_i and b outside A_i (but in the support) have a - b = delta.
 * Counts are indexed by the canonical element order.
 */
class DifferenceProfile {
public:
    DifferenceProfile(GroupSpec group, std::vector<std::int64_t> set_sizes,
                      std::vector<std::vector<std::int64_t>> counts)
        : group_(std::move(group)), sizes_(std::move(set_sizes)), counts_(std::move(counts)) {}

    [[nodiscard]] const GroupSpec& group() const { return group_; }
    [[nodiscard]] std::size_t set_count() const { return counts_.size(); }
    [[nodiscard]] const std::vector<std::int64_t>& set_sizes() const { return sizes_; }

    [[nodiscard]] std::int64_t count(std::size_t set_index, const Element& delta) const {
        if (set_index >= counts_.size())
            throw error(errc::index_out_of_range, "set index " + std::to_string(set_index) + " out of range");
        return counts_[set_index][static_cast<std::size_t>(group_.index_of(delta))];
    }

    [[nodiscard]] const std::vector<std::int64_t>& counts_for(std::size_t set_index) const {
        if (set_index >= counts_.size())
            throw error(errc::index_out_of_range, "set index " + std::to_string(set_index) + " out of range");
        return counts_[set_index];
    }

private:
    GroupSpec group_;
    std::vector<std::int64_t> sizes_;
    std::vector<std::vector<std::int64_t>> counts_;
};

inline DifferenceProfile difference_profile(const SetCollection& c) {
    const GroupSpec& g = c.group();
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<std::int64_t> sizes;
    std::vector<std::vector<std::int64_t>> counts(c.set_count(), std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < c.set_count(); ++i) {
        const ElementSet& a = c.set(i);
        sizes.push_back(static_cast<std::int64_t>(a.size()));
        for (const auto& x : a)
            for (const auto& y : c.support()) {
                if (set_contains(a, y)) continue;
                counts[i][static_cast<std::size_t>(g.index_of(g.sub(x, y)))]++;
            }
    }
    return DifferenceProfile(g, std::move(sizes), std::move(counts));
}

/// The subgroup generated by all differences of elements of one set. Since
/// x - y = (x0 - y) - (x0 - x), differences against a fixed base element
/// already generate the whole thing.
inline Subgroup internal_difference_group(const GroupSpec& g, const ElementSet& s) {
    if (s.empty()) throw error(errc::empty_set, "internal difference group of an empty set");
    std::vector<Element> gens;
    gens.reserve(s.size());
    for (const auto& y : s) gens.push_back(g.sub(s.front(), y));
    return Subgroup(g, make_set(std::move(gens)));
}

inline Subgroup internal_difference_group(const SetCollection& c, std::size_t i) {
    return internal_difference_group(c.group(), c.set(i));
}

/// A difference count that is neither 0 nor |A_i|.
struct ProfileWitness {
    std::size_t set_index = 0;
    Element delta;
    std::int64_t count = 0;
};

/// An element of the complement of A_i whose H_i-coset leaks outside it.
struct CosetWitness {
    std::size_t set_index = 0;
    Element element;
};

struct DefinitionVerdict {
    bool bimodal = false;
    std::optional<ProfileWitness> witness;
};

struct StructureVerdict {
    bool bimodal = false;
    std::optional<CosetWitness> witness;
};

/// Direct check of the two-value condition on the difference profile. The
/// witness, when present, is the first failing (set, delta) pair in
/// canonical order.
inline DefinitionVerdict is_bimodal_by_definition(const SetCollection& c) {
    DifferenceProfile p = difference_profile(c);
    const GroupSpec& g = c.group();
    for (std::size_t i = 0; i < c.set_count(); ++i) {
        const std::int64_t k = p.set_sizes()[i];
        const auto& row = p.counts_for(i);
        for (std::int64_t d = 1; d < g.order(); ++d) {
            const std::int64_t n = row[static_cast<std::size_t>(d)];
            if (n != 0 && n != k) return {false, ProfileWitness{i, g.element_at(d), n}};
        }
    }
    return {true, std::nullopt};
}

/// Structural check: the complement of each set must be a union of cosets of
/// that set's internal difference group. Independent of the profile-based
/// check, and equivalent to it.
inline StructureVerdict is_bimodal_by_structure(const SetCollection& c) {
    for (std::size_t i = 0; i < c.set_count(); ++i) {
        Subgroup h = internal_difference_group(c, i);
        CosetDecomposition dec = coset_decompose(h, c.complement_of(i));
        if (!dec.is_union) return {false, CosetWitness{i, *dec.witness}};
    }
    return {true, std::nullopt};
}

} // namespace bimodal
