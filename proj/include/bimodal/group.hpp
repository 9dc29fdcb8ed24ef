#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "bimodal/error.hpp"

namespace bimodal {

/// Element of a finite abelian group presented as Z_{n_1} x ... x Z_{n_k},
/// stored as a fully reduced residue tuple. Comparison is lexicographic on
/// the residues, which is the canonical order used everywhere in the library.
struct Element {
    std::vector<std::int64_t> residues;

    auto operator<=>(const Element&) const = default;
};

inline std::string to_string(const Element& e) {
    if (e.residues.size() == 1) return std::to_string(e.residues[0]);
    std::string out = "(";
    for (std::size_t i = 0; i < e.residues.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e.residues[i]);
    }
    out += ")";
    return out;
}

/**
 * Finite abelian group in invariant-style presentation: a product of cyclic
 * groups given by their orders. The trivial group (empty product, or any
 * product of Z_1 factors) is allowed. All element arithmetic reduces into
 * [0, n_i) per coordinate.
 */
class GroupSpec {
public:
    explicit GroupSpec(std::vector<std::int64_t> cyclic_orders)
        : orders_(std::move(cyclic_orders)) {
        order_ = 1;
        for (auto n : orders_) {
            if (n < 1) throw error(errc::invalid_argument, "cyclic order must be >= 1, got " + std::to_string(n));
            order_ *= n;
        }
    }

    static GroupSpec cyclic(std::int64_t n) { return GroupSpec({n}); }

    [[nodiscard]] const std::vector<std::int64_t>& cyclic_orders() const { return orders_; }
    [[nodiscard]] std::size_t rank() const { return orders_.size(); }
    [[nodiscard]] std::int64_t order() const { return order_; }

    [[nodiscard]] bool valid(const Element& e) const {
        if (e.residues.size() != orders_.size()) return false;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (e.residues[i] < 0 || e.residues[i] >= orders_[i]) return false;
        return true;
    }

    void require_valid(const Element& e) const {
        if (!valid(e))
            throw error(errc::invalid_element,
                        "element " + bimodal::to_string(e) + " is not a reduced residue tuple for this group");
    }

    [[nodiscard]] Element zero() const { return Element{std::vector<std::int64_t>(orders_.size(), 0)}; }

    /// Reduce an arbitrary integer tuple of matching rank into the group.
    [[nodiscard]] Element reduce(Element e) const {
        if (e.residues.size() != orders_.size())
            throw error(errc::invalid_element, "element rank " + std::to_string(e.residues.size()) +
                                                   " does not match group rank " + std::to_string(orders_.size()));
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            e.residues[i] %= orders_[i];
            if (e.residues[i] < 0) e.residues[i] += orders_[i];
        }
        return e;
    }

    [[nodiscard]] Element add(const Element& a, const Element& b) const {
        require_valid(a);
        require_valid(b);
        Element out = a;
        for (std::size_t i = 0; i < orders_.size(); ++i) {
            out.residues[i] += b.residues[i];
            if (out.residues[i] >= orders_[i]) out.residues[i] -= orders_[i];
        }
        return out;
    }

    [[nodiscard]] Element neg(const Element& a) const {
        require_valid(a);
        Element out = a;
        for (std::size_t i = 0; i < orders_.size(); ++i)
            if (out.residues[i] != 0) out.residues[i] = orders_[i] - out.residues[i];
        return out;
    }

    [[nodiscard]] Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

    /// Position of an element in the canonical (lexicographic) order.
    [[nodiscard]] std::int64_t index_of(const Element& e) const {
        require_valid(e);
        std::int64_t idx = 0;
        for (std::size_t i = 0; i < orders_.size(); ++i) idx = idx * orders_[i] + e.residues[i];
        return idx;
    }

    [[nodiscard]] Element element_at(std::int64_t index) const {
        if (index < 0 || index >= order_)
            throw error(errc::index_out_of_range, "element index " + std::to_string(index) + " out of range");
        std::vector<std::int64_t> r(orders_.size(), 0);
        for (std::size_t i = orders_.size(); i-- > 0;) {
            r[i] = index % orders_[i];
            index /= orders_[i];
        }
        return Element{std::move(r)};
    }

    /// All elements in canonical order.
    [[nodiscard]] std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(static_cast<std::size_t>(order_));
        for (std::int64_t i = 0; i < order_; ++i) out.push_back(element_at(i));
        return out;
    }

    bool operator==(const GroupSpec&) const = default;

private:
    std::vector<std::int64_t> orders_;
    std::int64_t order_;
};

/// Sorted, duplicate-free vector of elements: the working representation of
/// a subset of a group.
using ElementSet = std::vector<Element>;

inline ElementSet make_set(std::vector<Element> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

inline bool set_contains(const ElementSet& s, const Element& x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline ElementSet set_union(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElementSet set_difference(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline ElementSet set_intersection(const ElementSet& a, const ElementSet& b) {
    ElementSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

inline bool is_subset(const ElementSet& a, const ElementSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

/**
 * Subgroup of a GroupSpec, held as its full (canonically ordered) element
 * set together with the generating set it was built from. Construction
 * always closes the generators, so the invariant "elements form a subgroup
 * containing 0" holds by construction.
 */
class Subgroup {
public:
    Subgroup(GroupSpec ambient, std::vector<Element> generators)
        : ambient_(std::move(ambient)), generators_(std::move(generators)) {
        for (const auto& g : generators_) ambient_.require_valid(g);
        elements_ = close(ambient_, generators_);
    }

    static Subgroup trivial(GroupSpec ambient) { return Subgroup(std::move(ambient), {}); }

    /// Wrap a set already known (and verified here) to be closed under the
    /// group operation. Used for intersections and similar derived subgroups.
    static Subgroup from_elements(GroupSpec ambient, ElementSet elements) {
        Subgroup h(std::move(ambient), {});
        elements = make_set(std::move(elements));
        for (const auto& x : elements) h.ambient_.require_valid(x);
        if (elements.empty() || !set_contains(elements, h.ambient_.zero()))
            throw error(errc::invalid_argument, "subgroup element set must contain 0");
        for (const auto& x : elements)
            for (const auto& y : elements)
                if (!set_contains(elements, h.ambient_.add(x, y)))
                    throw error(errc::invalid_argument,
                                "element set is not closed: " + bimodal::to_string(x) + "+" + bimodal::to_string(y));
        h.generators_ = elements;
        h.elements_ = std::move(elements);
        return h;
    }

    [[nodiscard]] const GroupSpec& ambient() const { return ambient_; }
    [[nodiscard]] const std::vector<Element>& generators() const { return generators_; }
    [[nodiscard]] const ElementSet& elements() const { return elements_; }
    [[nodiscard]] std::int64_t order() const { return static_cast<std::int64_t>(elements_.size()); }
    [[nodiscard]] bool contains(const Element& x) const { return set_contains(elements_, x); }

    bool operator==(const Subgroup& other) const {
        return ambient_ == other.ambient_ && elements_ == other.elements_;
    }

private:
    static ElementSet close(const GroupSpec& g, const std::vector<Element>& gens) {
        std::set<Element> seen{g.zero()};
        std::vector<Element> frontier{g.zero()};
        while (!frontier.empty()) {
            std::vector<Element> next;
            for (const auto& x : frontier)
                for (const auto& gen : gens) {
                    Element y = g.add(x, gen);
                    if (seen.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return ElementSet(seen.begin(), seen.end());
    }

    GroupSpec ambient_;
    std::vector<Element> generators_;
    ElementSet elements_;
};

inline Subgroup subgroup_generate(const GroupSpec& g, std::vector<Element> generators) {
    return Subgroup(g, std::move(generators));
}

inline void require_same_ambient(const Subgroup& a, const Subgroup& b) {
    if (!(a.ambient() == b.ambient()))
        throw error(errc::ambient_mismatch, "subgroups live in different ambient groups");
}

/// Smallest subgroup containing every summand: generated by the union of
/// the summands' elements.
inline Subgroup subgroup_sum(const std::vector<Subgroup>& parts) {
    if (parts.empty()) throw error(errc::invalid_argument, "subgroup_sum needs at least one summand");
    std::vector<Element> gens;
    for (const auto& h : parts) {
        require_same_ambient(parts.front(), h);
        gens.insert(gens.end(), h.generators().begin(), h.generators().end());
    }
    return Subgroup(parts.front().ambient(), make_set(std::move(gens)));
}

inline Subgroup subgroup_intersect(const Subgroup& a, const Subgroup& b) {
    require_same_ambient(a, b);
    return Subgroup::from_elements(a.ambient(), set_intersection(a.elements(), b.elements()));
}

inline Subgroup subgroup_intersect(const std::vector<Subgroup>& parts) {
    if (parts.empty()) throw error(errc::invalid_argument, "subgroup_intersect needs at least one operand");
    Subgroup acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = subgroup_intersect(acc, parts[i]);
    return acc;
}

/// The coset x + H as a canonical element set.
inline ElementSet coset(const Subgroup& h, const Element& rep) {
    h.ambient().require_valid(rep);
    std::vector<Element> out;
    out.reserve(h.elements().size());
    for (const auto& e : h.elements()) out.push_back(h.ambient().add(rep, e));
    return make_set(std::move(out));
}

/// Lexicographically least element of x + H, the canonical representative.
inline Element coset_min(const Subgroup& h, const Element& rep) {
    h.ambient().require_valid(rep);
    Element best = rep;
    for (const auto& e : h.elements()) best = std::min(best, h.ambient().add(rep, e));
    return best;
}

struct CosetDecomposition {
    bool is_union = false;
    /// Canonical representative (lexicographically least member) of each
    /// coset, ascending; only meaningful when is_union.
    std::vector<Element> representatives;
    /// First element in canonical order whose coset is not wholly inside the
    /// queried set; only meaningful when !is_union.
    std::optional<Element> witness;
};

/// Decide whether S is a union of cosets of H and report either the coset
/// representatives or the first offending element.
inline CosetDecomposition coset_decompose(const Subgroup& h, const ElementSet& s) {
    for (const auto& x : s) h.ambient().require_valid(x);
    CosetDecomposition out;
    ElementSet covered;
    for (const auto& x : s) {
        if (set_contains(covered, x)) continue;
        ElementSet cs = coset(h, x);
        if (!is_subset(cs, s)) {
            out.is_union = false;
            out.witness = x;
            out.representatives.clear();
            return out;
        }
        out.representatives.push_back(cs.front());
        covered = set_union(covered, cs);
    }
    out.is_union = true;
    return out;
}

/// Every subgroup of the group (optionally only those of order <= order_cap),
/// found by repeatedly extending known subgroups by one new generator.
/// Result is sorted by (order, elements).
inline std::vector<Subgroup> all_subgroups(const GroupSpec& g, std::int64_t order_cap = 0) {
    if (order_cap <= 0) order_cap = g.order();
    std::vector<Element> universe = g.elements();
    std::set<ElementSet> seen;
    std::vector<Subgroup> found;
    std::vector<Subgroup> frontier{Subgroup::trivial(g)};
    seen.insert(frontier.front().elements());
    while (!frontier.empty()) {
        std::vector<Subgroup> next;
        for (const auto& h : frontier) {
            found.push_back(h);
            for (const auto& x : universe) {
                if (h.contains(x)) continue;
                std::vector<Element> gens = h.generators();
                gens.push_back(x);
                Subgroup ext(g, make_set(std::move(gens)));
                if (ext.order() > order_cap) continue;
                if (seen.insert(ext.elements()).second) next.push_back(ext);
            }
        }
        frontier = std::move(next);
    }
    std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return found;
}

} // namespace bimodal
