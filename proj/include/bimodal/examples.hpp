#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bimodal/classify.hpp"
#include "bimodal/collection.hpp"
#include "bimodal/group.hpp"

namespace bimodal {

/// A worked collection with its known classification, used as a built-in
/// regression fixture.
struct GoldenExample {
    std::string name;
    std::string description;
    SetCollection collection;
    TrichotomyCase expected_case;
    std::size_t expected_r;
    std::optional<ElementSet> expected_kernel;
    std::int64_t expected_sum_order;
};

inline const std::vector<GoldenExample>& golden_examples() {
    static const std::vector<GoldenExample> examples = [] {
        std::vector<GoldenExample> out;

        GroupSpec z10 = GroupSpec::cyclic(10);
        out.push_back(GoldenExample{
            "z10-cosets",
            "three cosets of the order-2 subgroup of Z_10",
            SetCollection(z10, {{{{1}}, {{6}}}, {{{3}}, {{8}}}, {{{4}}, {{9}}}}),
            TrichotomyCase::r0, 0, std::nullopt, 2});

        GroupSpec z3z3({3, 3});
        out.push_back(GoldenExample{
            "z3z3-partition",
            "the four punctured order-3 subgroups partitioning Z_3 x Z_3",
            SetCollection(z3z3, {{{{1, 1}}, {{2, 2}}}, {{{0, 1}}, {{0, 2}}}, {{{1, 2}}, {{2, 1}}},
                                 {{{1, 0}}, {{2, 0}}}}),
            TrichotomyCase::r_ge2, 4, ElementSet{Element{{0, 0}}}, 9});

        GroupSpec z12 = GroupSpec::cyclic(12);
        out.push_back(GoldenExample{
            "z12-mixed",
            "two punctured subgroups of Z_12 with the leftovers as singletons",
            SetCollection(z12, {{{{4}}, {{8}}}, {{{3}}, {{6}}, {{9}}}, {{{1}}}, {{{2}}}, {{{5}}},
                                {{{7}}}, {{{10}}}, {{{11}}}}),
            TrichotomyCase::r_ge2, 2, ElementSet{Element{{0}}}, 12});

        GroupSpec z2cubed({2, 2, 2});
        out.push_back(GoldenExample{
            "z2cubed-subdivision",
            "Z_2^3 split into four cosets of four different order-2 subgroups",
            SetCollection(z2cubed, {{{{0, 0, 0}}, {{0, 0, 1}}},
                                    {{{0, 1, 0}}, {{1, 1, 0}}},
                                    {{{1, 0, 0}}, {{1, 1, 1}}},
                                    {{{0, 1, 1}}, {{1, 0, 1}}}}),
            TrichotomyCase::r0, 0, std::nullopt, 8});

        GroupSpec z36 = GroupSpec::cyclic(36);
        out.push_back(GoldenExample{
            "z36-r1",
            "a proper generating subset of <3> in Z_36 plus a tiling of 1 + <3>",
            SetCollection(z36, {{{{12}}, {{15}}, {{30}}, {{33}}},
                                {{{1}}, {{19}}},
                                {{{4}}, {{22}}},
                                {{{7}}, {{25}}},
                                {{{10}}, {{28}}},
                                {{{13}}},
                                {{{16}}},
                                {{{31}}},
                                {{{34}}}}),
            TrichotomyCase::r1, 1, ElementSet{Element{{0}}, Element{{18}}}, 12});

        return out;
    }();
    return examples;
}

inline const GoldenExample* find_golden_example(std::string_view name) {
    for (const auto& e : golden_examples())
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace bimodal
