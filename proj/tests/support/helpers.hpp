#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bimodal/collection.hpp"
#include "bimodal/group.hpp"

namespace testutil {

inline bimodal::Element el(std::int64_t v) { return bimodal::Element{{v}}; }
inline bimodal::Element el(std::vector<std::int64_t> v) { return bimodal::Element{std::move(v)}; }

inline bimodal::ElementSet els(const std::vector<std::int64_t>& vs) {
    std::vector<bimodal::Element> out;
    out.reserve(vs.size());
    for (auto v : vs) out.push_back(el(v));
    return bimodal::make_set(std::move(out));
}

/// Collection over Z_n from bare residues.
inline bimodal::SetCollection cyclic_collection(std::int64_t n,
                                                const std::vector<std::vector<std::int64_t>>& sets) {
    std::vector<std::vector<bimodal::Element>> parsed;
    parsed.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<bimodal::Element> p;
        p.reserve(s.size());
        for (auto v : s) p.push_back(el(v));
        parsed.push_back(std::move(p));
    }
    return bimodal::SetCollection(bimodal::GroupSpec::cyclic(n), std::move(parsed));
}

/// Collection over a product group from residue tuples.
inline bimodal::SetCollection product_collection(std::vector<std::int64_t> orders,
                                                 const std::vector<std::vector<std::vector<std::int64_t>>>& sets) {
    std::vector<std::vector<bimodal::Element>> parsed;
    parsed.reserve(sets.size());
    for (const auto& s : sets) {
        std::vector<bimodal::Element> p;
        p.reserve(s.size());
        for (const auto& v : s) p.push_back(el(v));
        parsed.push_back(std::move(p));
    }
    return bimodal::SetCollection(bimodal::GroupSpec(std::move(orders)), std::move(parsed));
}

/// Profile recomputed pair-by-pair over distinct sets, independently of the
/// library's complement-based loop.
inline std::int64_t naive_external_count(const bimodal::SetCollection& c, std::size_t i,
                                         const bimodal::Element& delta) {
    std::int64_t n = 0;
    for (std::size_t j = 0; j < c.set_count(); ++j) {
        if (j == i) continue;
        for (const auto& a : c.set(i))
            for (const auto& b : c.set(j))
                if (c.group().sub(a, b) == delta) ++n;
    }
    return n;
}

inline bool naive_is_bimodal(const bimodal::SetCollection& c) {
    const bimodal::GroupSpec& g = c.group();
    for (std::size_t i = 0; i < c.set_count(); ++i) {
        const auto k = static_cast<std::int64_t>(c.set(i).size());
        for (std::int64_t d = 1; d < g.order(); ++d) {
            const std::int64_t n = naive_external_count(c, i, g.element_at(d));
            if (n != 0 && n != k) return false;
        }
    }
    return true;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    out << body;
}

inline std::string golden_path(const std::string& name) { return std::string(BIMODAL_GOLDEN_DIR) + "/" + name; }

} // namespace testutil
