#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "bimodal/group.hpp"

namespace bimodal {

/// Saturation value for counting: anything this large means "too many".
inline constexpr std::uint64_t kCountSaturated = std::numeric_limits<std::uint64_t>::max();

inline std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    return a > kCountSaturated - b ? kCountSaturated : a + b;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a > kCountSaturated / b ? kCountSaturated : a * b;
}

/// Bell number B(n) by the Bell-triangle recurrence, saturating instead of
/// overflowing.
inline std::uint64_t bell_number(std::size_t n) {
    std::vector<std::uint64_t> row{1};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (std::uint64_t v : row) next.push_back(saturating_add(next.back(), v));
        row = std::move(next);
    }
    return row.front();
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (c == kCountSaturated) return kCountSaturated;
        // exact at each step: c * (n-k+i) is divisible by i; the 128-bit
        // intermediate keeps results just below the saturation point exact
        const unsigned __int128 next = static_cast<unsigned __int128>(c) * (n - k + i) / i;
        c = next > kCountSaturated ? kCountSaturated : static_cast<std::uint64_t>(next);
    }
    return c;
}

/**
 * Visit every partition of `items` into non-empty blocks, at most max_parts
 * of them (0 = no bound), by iterating restricted growth strings in
 * lexicographic order. Blocks are labelled by first appearance, so both the
 * visiting order and the block order within a partition are canonical and
 * independent of the caller.
 */
inline void for_each_set_partition(const std::vector<Element>& items, std::size_t max_parts,
                                   const std::function<void(const std::vector<ElementSet>&)>& visit) {
    const std::size_t n = items.size();
    if (n == 0) return;
    const std::size_t cap = max_parts == 0 ? n : std::min(max_parts, n);
    std::vector<std::size_t> rgs(n, 0);
    std::vector<ElementSet> parts;
    auto emit = [&] {
        const std::size_t labels = *std::max_element(rgs.begin(), rgs.end()) + 1;
        parts.assign(labels, {});
        for (std::size_t j = 0; j < n; ++j) parts[rgs[j]].push_back(items[j]);
        visit(parts);
    };
    emit();
    while (true) {
        bool advanced = false;
        for (std::size_t j = n; j-- > 1;) {
            const std::size_t prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(j));
            if (rgs[j] <= prefix_max && rgs[j] + 1 < cap) {
                ++rgs[j];
                std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(j) + 1, rgs.end(), 0);
                advanced = true;
                break;
            }
        }
        if (!advanced) return;
        emit();
    }
}

} // namespace bimodal
