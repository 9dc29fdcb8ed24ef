#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bimodal/classify.hpp"
#include "bimodal/collection.hpp"
#include "bimodal/error.hpp"
#include "bimodal/group.hpp"
#include "bimodal/partitions.hpp"

namespace bimodal {

enum class SupportMode { fixed, all_subsets };
enum class DedupeMode { none, up_to_shift };

/**
 * What to enumerate: every partition of every admissible support into
 * disjoint non-empty sets. Supports are either all non-empty subsets of the
 * group up to max_support elements, or one fixed subset. The Bell-number
 * cost estimate is checked against the budget before any work starts;
 * budget 0 disables the check.
 */
struct EnumerationScope {
    GroupSpec group;
    SupportMode mode = SupportMode::all_subsets;
    ElementSet fixed_support;
    std::int64_t max_support = 0; // all_subsets: cap on support size, 0 = |G|
    std::size_t max_parts = 0;    // cap on number of sets, 0 = unbounded
    DedupeMode dedupe = DedupeMode::none;
    std::uint64_t budget = 10'000'000;
    bool materialize = false;
    unsigned workers = 1;
};

struct EnumerationResult {
    std::uint64_t candidates = 0;
    std::uint64_t bimodal_count = 0;
    std::array<std::uint64_t, 3> by_case{}; // indexed by TrichotomyCase
    std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> by_m_r;
    std::vector<SetCollection> collections; // filled when materialize is set
};

namespace detail {

inline std::int64_t effective_max_support(const EnumerationScope& scope) {
    if (scope.max_support == 0) return scope.group.order();
    return scope.max_support;
}

inline void validate_scope(const EnumerationScope& scope) {
    if (scope.mode == SupportMode::fixed) {
        if (scope.fixed_support.empty())
            throw error(errc::invalid_argument, "fixed support must be non-empty");
        for (const auto& x : scope.fixed_support) scope.group.require_valid(x);
    } else {
        const std::int64_t cap = effective_max_support(scope);
        if (cap < 1 || cap > scope.group.order())
            throw error(errc::invalid_argument,
                        "max_support " + std::to_string(cap) + " must lie in [1, " +
                            std::to_string(scope.group.order()) + "]");
    }
}

inline std::vector<ElementSet> supports_of(const EnumerationScope& scope) {
    if (scope.mode == SupportMode::fixed) return {make_set(scope.fixed_support)};
    std::vector<Element> universe = scope.group.elements();
    const auto n = universe.size();
    const auto cap = static_cast<std::size_t>(effective_max_support(scope));
    std::vector<ElementSet> out;
    for (std::size_t sz = 1; sz <= cap && sz <= n; ++sz) {
        std::vector<std::size_t> idx(sz);
        for (std::size_t i = 0; i < sz; ++i) idx[i] = i;
        while (true) {
            ElementSet support;
            support.reserve(sz);
            for (auto i : idx) support.push_back(universe[i]);
            out.push_back(std::move(support));
            std::size_t k = sz;
            while (k > 0 && idx[k - 1] == n - sz + k - 1) --k;
            if (k == 0) break;
            ++idx[k - 1];
            for (std::size_t i = k; i < sz; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
    return out;
}

/// Shift-invariant identity of a collection: the least serialization over
/// every translate, with the sets sorted so labels do not matter.
inline std::vector<std::int64_t> orbit_key(const SetCollection& c) {
    const GroupSpec& g = c.group();
    std::vector<std::int64_t> best;
    for (const auto& shift_by : g.elements()) {
        std::vector<std::vector<std::int64_t>> image;
        image.reserve(c.set_count());
        for (const auto& s : c.sets()) {
            std::vector<std::int64_t> moved;
            moved.reserve(s.size());
            for (const auto& x : s) moved.push_back(g.index_of(g.add(x, shift_by)));
            std::sort(moved.begin(), moved.end());
            image.push_back(std::move(moved));
        }
        std::sort(image.begin(), image.end());
        std::vector<std::int64_t> key;
        for (const auto& s : image) {
            key.push_back(static_cast<std::int64_t>(s.size()));
            key.insert(key.end(), s.begin(), s.end());
        }
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

struct Survivor {
    std::size_t support_index = 0;
    std::uint64_t sequence = 0;
    SetCollection collection;
};

} // namespace detail

/// Upper bound on the number of candidate collections the scope will visit
/// (Bell numbers ignore the max_parts cap, so this can overshoot).
inline std::uint64_t estimate_candidates(const EnumerationScope& scope) {
    detail::validate_scope(scope);
    if (scope.mode == SupportMode::fixed) return bell_number(make_set(scope.fixed_support).size());
    const auto n = static_cast<std::uint64_t>(scope.group.order());
    const auto cap = static_cast<std::uint64_t>(detail::effective_max_support(scope));
    std::uint64_t total = 0;
    for (std::uint64_t sz = 1; sz <= cap && sz <= n; ++sz)
        total = saturating_add(total, saturating_mul(binomial(n, sz), bell_number(static_cast<std::size_t>(sz))));
    return total;
}

/**
 * Exhaustively enumerate the scope, keep the collections that pass the
 * profile-based bimodality check, optionally fold shift-translates together,
 * and classify every survivor into the census. Worker threads split the
 * supports; results are merged back into canonical order, so the outcome is
 * identical for any worker count.
 */
inline EnumerationResult enumerate_bimodal(const EnumerationScope& scope) {
    detail::validate_scope(scope);
    const std::uint64_t estimate = estimate_candidates(scope);
    if (scope.budget != 0 && estimate > scope.budget)
        throw error(errc::budget_exceeded,
                    "estimated " +
                        (estimate == kCountSaturated ? std::string("well over 2^64")
                                                     : std::to_string(estimate)) +
                        " candidates, budget is " + std::to_string(scope.budget));

    const std::vector<ElementSet> supports = detail::supports_of(scope);
    const unsigned workers = std::max(1u, scope.workers);
    std::vector<std::uint64_t> counts(workers, 0);
    std::vector<std::vector<detail::Survivor>> found(workers);

    auto run_worker = [&](unsigned w) {
        for (std::size_t s = w; s < supports.size(); s += workers) {
            std::uint64_t seq = 0;
            for_each_set_partition(supports[s], scope.max_parts, [&](const std::vector<ElementSet>& parts) {
                ++counts[w];
                SetCollection c(scope.group, {parts.begin(), parts.end()});
                if (is_bimodal_by_definition(c).bimodal)
                    found[w].push_back(detail::Survivor{s, seq, std::move(c)});
                ++seq;
            });
        }
    };
    if (workers == 1) {
        run_worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run_worker, w);
        for (auto& t : pool) t.join();
    }

    std::vector<detail::Survivor> survivors;
    for (auto& part : found)
        for (auto& s : part) survivors.push_back(std::move(s));
    std::sort(survivors.begin(), survivors.end(), [](const detail::Survivor& a, const detail::Survivor& b) {
        return std::tie(a.support_index, a.sequence) < std::tie(b.support_index, b.sequence);
    });

    EnumerationResult result;
    for (auto& c : counts) result.candidates += c;
    std::set<std::vector<std::int64_t>> seen_orbits;
    for (auto& s : survivors) {
        if (scope.dedupe == DedupeMode::up_to_shift && !seen_orbits.insert(detail::orbit_key(s.collection)).second)
            continue;
        ClassificationReport report = classify(s.collection);
        ++result.bimodal_count;
        ++result.by_case[static_cast<std::size_t>(report.kind)];
        ++result.by_m_r[{s.collection.set_count(), report.r}];
        if (scope.materialize) result.collections.push_back(std::move(s.collection));
    }
    return result;
}

struct CrossValidationReport {
    std::uint64_t candidates = 0;
    std::uint64_t bimodal_count = 0;
    std::uint64_t checker_disagreements = 0;
    std::uint64_t structure_violations = 0;
    bool pass = false;
    std::string first_failure;
};

/**
 * Run both bimodality checkers over every candidate in the scope and, for
 * each collection they accept, re-derive the classification and verify the
 * coset hull of every set meets no other set. Any disagreement or structural
 * failure is counted and the first one is described.
 */
inline CrossValidationReport cross_validate(const EnumerationScope& scope) {
    detail::validate_scope(scope);
    const std::uint64_t estimate = estimate_candidates(scope);
    if (scope.budget != 0 && estimate > scope.budget)
        throw error(errc::budget_exceeded, "estimated " + std::to_string(estimate) + " candidates, budget is " +
                                               std::to_string(scope.budget));
    CrossValidationReport report;
    auto note_failure = [&](const std::string& what) {
        if (report.first_failure.empty()) report.first_failure = what;
    };
    for (const auto& support : detail::supports_of(scope)) {
        for_each_set_partition(support, scope.max_parts, [&](const std::vector<ElementSet>& parts) {
            ++report.candidates;
            SetCollection c(scope.group, {parts.begin(), parts.end()});
            DefinitionVerdict by_def = is_bimodal_by_definition(c);
            StructureVerdict by_structure = is_bimodal_by_structure(c);
            if (by_def.bimodal != by_structure.bimodal) {
                ++report.checker_disagreements;
                note_failure("checkers disagree on candidate #" + std::to_string(report.candidates));
                return;
            }
            if (!by_def.bimodal) return;
            ++report.bimodal_count;
            try {
                ClassificationReport cls = classify(c);
                for (std::size_t i = 0; i < c.set_count(); ++i) {
                    ElementSet hull = coset(cls.per_set[i].internal_group, c.set(i).front());
                    for (std::size_t j = 0; j < c.set_count(); ++j) {
                        if (i == j) continue;
                        if (!set_intersection(hull, c.set(j)).empty()) {
                            ++report.structure_violations;
                            note_failure("coset hull of set " + std::to_string(i) + " meets set " +
                                         std::to_string(j) + " in candidate #" + std::to_string(report.candidates));
                            return;
                        }
                    }
                }
            } catch (const error& e) {
                ++report.structure_violations;
                note_failure("classification failed on candidate #" + std::to_string(report.candidates) + ": " +
                             e.what());
            }
        });
    }
    report.pass = report.checker_disagreements == 0 && report.structure_violations == 0;
    return report;
}

} // namespace bimodal
