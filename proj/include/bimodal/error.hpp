#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bimodal {

/// Failure categories surfaced by the library. Verdicts ("this collection is
/// not bimodal") are ordinary return values, not errors; errc covers contract
/// violations, malformed input and refused work.
enum class errc {
    invalid_element,
    ambient_mismatch,
    index_out_of_range,
    empty_set,
    not_disjoint,
    not_bimodal,
    theorem_violation,
    duplicate_coset,
    not_a_partition,
    index_condition,
    subdivision_hypothesis,
    not_a_star,
    interior_tiling,
    generation,
    tiling_subgroup,
    tiling,
    budget_exceeded,
    schema,
    invalid_argument,
};

constexpr std::string_view to_string(errc c) {
    switch (c) {
    case errc::invalid_element: return "invalid-element";
    case errc::ambient_mismatch: return "ambient-mismatch";
    case errc::index_out_of_range: return "index-out-of-range";
    case errc::empty_set: return "empty-set";
    case errc::not_disjoint: return "not-disjoint";
    case errc::not_bimodal: return "not-bimodal";
    case errc::theorem_violation: return "theorem-violation";
    case errc::duplicate_coset: return "duplicate-coset";
    case errc::not_a_partition: return "not-a-partition";
    case errc::index_condition: return "index-condition";
    case errc::subdivision_hypothesis: return "subdivision-hypothesis";
    case errc::not_a_star: return "not-a-star";
    case errc::interior_tiling: return "interior-tiling";
    case errc::generation: return "generation";
    case errc::tiling_subgroup: return "tiling-subgroup";
    case errc::tiling: return "tiling";
    case errc::budget_exceeded: return "budget-exceeded";
    case errc::schema: return "schema";
    case errc::invalid_argument: return "invalid-argument";
    }
    return "unknown";
}

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    [[nodiscard]] errc code() const noexcept { return code_; }

private:
    errc code_;
};

} // namespace bimodal
