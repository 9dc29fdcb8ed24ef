#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bimodal/classify.hpp"
#include "bimodal/collection.hpp"
#include "bimodal/construct.hpp"
#include "bimodal/enumerate.hpp"
#include "bimodal/error.hpp"
#include "bimodal/group.hpp"

namespace bimodal {

/// Interchange documents preserve key order, so emission is byte-stable.
using json = nlohmann::ordered_json;

namespace detail {

inline const json& require_field(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw error(errc::schema, where + " must be an object");
    auto it = j.find(key);
    if (it == j.end()) throw error(errc::schema, where + " is missing \"" + key + "\"");
    return *it;
}

inline const json* optional_field(const json& j, const char* key) {
    if (!j.is_object()) return nullptr;
    auto it = j.find(key);
    return it == j.end() ? nullptr : &*it;
}

inline std::int64_t require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw error(errc::schema, where + " must be an integer");
    return j.get<std::int64_t>();
}

inline const json& require_array(const json& j, const std::string& where) {
    if (!j.is_array()) throw error(errc::schema, where + " must be an array");
    return j;
}

} // namespace detail

inline json parse_document(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw error(errc::schema, "input is not valid JSON");
    return j;
}

inline std::string to_document(const json& j) { return j.dump(2) + "\n"; }

// ---- groups and elements ----------------------------------------------

inline GroupSpec group_from_json(const json& j) {
    const json& orders = detail::require_array(detail::require_field(j, "cyclic_orders", "group"),
                                               "group.cyclic_orders");
    std::vector<std::int64_t> out;
    out.reserve(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i)
        out.push_back(detail::require_int(orders[i], "group.cyclic_orders[" + std::to_string(i) + "]"));
    return GroupSpec(std::move(out));
}

inline json group_to_json(const GroupSpec& g) { return json{{"cyclic_orders", g.cyclic_orders()}}; }

inline Element element_from_json(const GroupSpec& g, const json& j, const std::string& where) {
    if (j.is_number_integer()) {
        if (g.rank() != 1)
            throw error(errc::schema, where + ": bare integers only name elements of rank-1 groups");
        return Element{{j.get<std::int64_t>()}};
    }
    if (!j.is_array()) throw error(errc::schema, where + " must be an integer or an array of integers");
    if (j.size() != g.rank())
        throw error(errc::schema, where + " has " + std::to_string(j.size()) + " coordinates, group rank is " +
                                      std::to_string(g.rank()));
    std::vector<std::int64_t> r;
    r.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        r.push_back(detail::require_int(j[i], where + "[" + std::to_string(i) + "]"));
    return Element{std::move(r)};
}

inline json element_to_json(const GroupSpec& g, const Element& e) {
    if (g.rank() == 1) return json(e.residues[0]);
    return json(e.residues);
}

inline std::vector<Element> element_list_from_json(const GroupSpec& g, const json& j, const std::string& where) {
    detail::require_array(j, where);
    std::vector<Element> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(element_from_json(g, j[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

inline json element_set_to_json(const GroupSpec& g, const ElementSet& s) {
    json out = json::array();
    for (const auto& x : s) out.push_back(element_to_json(g, x));
    return out;
}

/// Subgroups travel as arrays of generators in input documents.
inline Subgroup subgroup_from_json(const GroupSpec& g, const json& j, const std::string& where) {
    return Subgroup(g, element_list_from_json(g, j, where));
}

// ---- collections --------------------------------------------------------

inline SetCollection collection_from_json(const json& j) {
    GroupSpec g = group_from_json(detail::require_field(j, "group", "document"));
    const json& sets = detail::require_array(detail::require_field(j, "sets", "document"), "sets");
    std::vector<std::vector<Element>> parsed;
    parsed.reserve(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i)
        parsed.push_back(element_list_from_json(g, sets[i], "sets[" + std::to_string(i) + "]"));
    return SetCollection(std::move(g), std::move(parsed));
}

inline SetCollection parse_collection(const std::string& text) {
    return collection_from_json(parse_document(text));
}

inline json collection_to_json(const SetCollection& c) {
    json sets = json::array();
    for (const auto& s : c.sets()) sets.push_back(element_set_to_json(c.group(), s));
    return json{{"group", group_to_json(c.group())}, {"sets", std::move(sets)}};
}

// ---- verdicts, profiles, reports ----------------------------------------

inline json verdicts_to_json(const SetCollection& c, const DefinitionVerdict& def, const StructureVerdict& st) {
    const GroupSpec& g = c.group();
    json jd{{"bimodal", def.bimodal}, {"witness", nullptr}};
    if (def.witness)
        jd["witness"] = json{{"set", def.witness->set_index},
                             {"delta", element_to_json(g, def.witness->delta)},
                             {"count", def.witness->count}};
    json js{{"bimodal", st.bimodal}, {"witness", nullptr}};
    if (st.witness)
        js["witness"] = json{{"set", st.witness->set_index},
                             {"element", element_to_json(g, st.witness->element)}};
    return json{{"bimodal", def.bimodal}, {"definition", std::move(jd)}, {"structure", std::move(js)}};
}

inline json profile_to_json(const SetCollection& c, const DifferenceProfile& p) {
    const GroupSpec& g = c.group();
    json rows = json::array();
    for (std::size_t i = 0; i < c.set_count(); ++i) {
        json counts = json::array();
        for (std::int64_t d = 1; d < g.order(); ++d) {
            const std::int64_t n = p.counts_for(i)[static_cast<std::size_t>(d)];
            if (n != 0) counts.push_back(json::array({element_to_json(g, g.element_at(d)), n}));
        }
        rows.push_back(json{{"set", i}, {"size", p.set_sizes()[i]}, {"counts", std::move(counts)}});
    }
    return json{{"group", group_to_json(g)},
                {"sets", collection_to_json(c)["sets"]},
                {"profile", std::move(rows)}};
}

inline json report_to_json(const SetCollection& c, const ClassificationReport& r) {
    const GroupSpec& g = c.group();
    json sets = json::array();
    for (std::size_t i = 0; i < r.per_set.size(); ++i)
        sets.push_back(json{{"index", i},
                            {"size", r.per_set[i].size},
                            {"full", r.per_set[i].full},
                            {"internal_group", element_set_to_json(g, r.per_set[i].internal_group.elements())}});
    json tiling = json::array();
    for (const auto& tile : r.coset_tiling)
        tiling.push_back(json{{"coset", element_to_json(g, tile.coset_rep)}, {"sets", tile.set_indices}});
    return json{{"case", std::string(to_string(r.kind))},
                {"r", r.r},
                {"reorder", r.reorder},
                {"sets", std::move(sets)},
                {"kernel", r.kernel ? element_set_to_json(g, *r.kernel) : json(nullptr)},
                {"sum_group", element_set_to_json(g, r.sum_group.elements())},
                {"canonical_shift", element_to_json(g, r.canonical_shift)},
                {"interior_sets", r.interior_sets},
                {"coset_tiling", std::move(tiling)}};
}

// ---- enumeration scopes and censuses -------------------------------------

inline EnumerationScope scope_from_json(const json& j) {
    EnumerationScope scope{group_from_json(detail::require_field(j, "group", "scope"))};
    const json& support = detail::require_field(j, "support", "scope");
    const json* fixed = detail::optional_field(support, "elements");
    const json* cap = detail::optional_field(support, "max_support");
    if ((fixed != nullptr) == (cap != nullptr))
        throw error(errc::schema, "scope.support needs exactly one of \"elements\" and \"max_support\"");
    if (fixed) {
        scope.mode = SupportMode::fixed;
        scope.fixed_support = make_set(element_list_from_json(scope.group, *fixed, "scope.support.elements"));
    } else {
        scope.mode = SupportMode::all_subsets;
        scope.max_support = detail::require_int(*cap, "scope.support.max_support");
    }
    if (const json* v = detail::optional_field(j, "max_parts"))
        scope.max_parts = static_cast<std::size_t>(detail::require_int(*v, "scope.max_parts"));
    if (const json* v = detail::optional_field(j, "dedupe")) {
        if (!v->is_string()) throw error(errc::schema, "scope.dedupe must be \"none\" or \"shift\"");
        const std::string mode = v->get<std::string>();
        if (mode == "none") scope.dedupe = DedupeMode::none;
        else if (mode == "shift") scope.dedupe = DedupeMode::up_to_shift;
        else throw error(errc::schema, "scope.dedupe must be \"none\" or \"shift\", got \"" + mode + "\"");
    }
    if (const json* v = detail::optional_field(j, "budget"))
        scope.budget = static_cast<std::uint64_t>(detail::require_int(*v, "scope.budget"));
    if (const json* v = detail::optional_field(j, "workers"))
        scope.workers = static_cast<unsigned>(detail::require_int(*v, "scope.workers"));
    if (const json* v = detail::optional_field(j, "materialize")) {
        if (!v->is_boolean()) throw error(errc::schema, "scope.materialize must be a boolean");
        scope.materialize = v->get<bool>();
    }
    return scope;
}

inline json census_to_json(const EnumerationScope& scope, const EnumerationResult& result) {
    json jscope;
    if (scope.mode == SupportMode::fixed) {
        jscope["mode"] = "fixed";
        jscope["support"] = element_set_to_json(scope.group, scope.fixed_support);
    } else {
        jscope["mode"] = "all_subsets";
        jscope["max_support"] = scope.max_support == 0 ? scope.group.order() : scope.max_support;
    }
    jscope["max_parts"] = scope.max_parts;
    jscope["dedupe"] = scope.dedupe == DedupeMode::up_to_shift ? "shift" : "none";
    jscope["budget"] = scope.budget;
    json by_case{{"r0", result.by_case[0]}, {"r1", result.by_case[1]}, {"r_ge2", result.by_case[2]}};
    json by_m_r = json::array();
    for (const auto& [key, count] : result.by_m_r)
        by_m_r.push_back(json{{"m", key.first}, {"r", key.second}, {"count", count}});
    json out{{"group", group_to_json(scope.group)},
             {"scope", std::move(jscope)},
             {"candidates", result.candidates},
             {"bimodal", result.bimodal_count},
             {"by_case", std::move(by_case)},
             {"by_m_r", std::move(by_m_r)}};
    if (scope.materialize) {
        json cols = json::array();
        for (const auto& c : result.collections) cols.push_back(collection_to_json(c));
        out["collections"] = std::move(cols);
    }
    return out;
}

// ---- construction specs ---------------------------------------------------

inline SetCollection construct_from_json(const std::string& kind, const json& j) {
    if (kind == "cosets") {
        GroupSpec g = group_from_json(detail::require_field(j, "group", "spec"));
        Subgroup h = subgroup_from_json(g, detail::require_field(j, "subgroup", "spec"), "subgroup");
        return construct_cosets(h, element_list_from_json(g, detail::require_field(j, "reps", "spec"), "reps"));
    }
    if (kind == "group-partition" || kind == "mixed-partition") {
        GroupSpec g = group_from_json(detail::require_field(j, "group", "spec"));
        const json& subs = detail::require_array(detail::require_field(j, "subgroups", "spec"), "subgroups");
        std::vector<Subgroup> parsed;
        parsed.reserve(subs.size());
        for (std::size_t i = 0; i < subs.size(); ++i)
            parsed.push_back(subgroup_from_json(g, subs[i], "subgroups[" + std::to_string(i) + "]"));
        return kind == "group-partition" ? construct_group_partition(g, parsed)
                                         : construct_mixed_partition(g, parsed);
    }
    if (kind == "shift") {
        SetCollection c = collection_from_json(detail::require_field(j, "collection", "spec"));
        return shift(c, element_from_json(c.group(), detail::require_field(j, "by", "spec"), "by"));
    }
    if (kind == "subdivide") {
        SetCollection c = collection_from_json(detail::require_field(j, "collection", "spec"));
        const auto index = static_cast<std::size_t>(detail::require_int(detail::require_field(j, "set", "spec"),
                                                                        "set"));
        const json& parts = detail::require_array(detail::require_field(j, "parts", "spec"), "parts");
        std::vector<std::vector<Element>> parsed;
        parsed.reserve(parts.size());
        for (std::size_t i = 0; i < parts.size(); ++i)
            parsed.push_back(element_list_from_json(c.group(), parts[i], "parts[" + std::to_string(i) + "]"));
        return subdivide(c, index, parsed);
    }
    if (kind == "star") {
        GroupSpec g = group_from_json(detail::require_field(j, "group", "spec"));
        const json& subs = detail::require_array(detail::require_field(j, "subgroups", "spec"), "subgroups");
        StarSpec spec{{}, subgroup_from_json(g, detail::require_field(j, "kernel", "spec"), "kernel"), {}, {}};
        for (std::size_t i = 0; i < subs.size(); ++i)
            spec.subgroups.push_back(subgroup_from_json(g, subs[i], "subgroups[" + std::to_string(i) + "]"));
        if (const json* v = detail::optional_field(j, "interior_reps"))
            spec.interior_coset_reps = element_list_from_json(g, *v, "interior_reps");
        if (const json* v = detail::optional_field(j, "outer_reps"))
            spec.outer_coset_reps = element_list_from_json(g, *v, "outer_reps");
        return construct_star(spec);
    }
    if (kind == "r1") {
        GroupSpec g = group_from_json(detail::require_field(j, "group", "spec"));
        Subgroup h1 = subgroup_from_json(g, detail::require_field(j, "h1", "spec"), "h1");
        std::vector<Element> a1 = element_list_from_json(g, detail::require_field(j, "a1", "spec"), "a1");
        std::vector<TilingPart> tiling;
        if (const json* v = detail::optional_field(j, "tiling")) {
            detail::require_array(*v, "tiling");
            for (std::size_t i = 0; i < v->size(); ++i) {
                const std::string where = "tiling[" + std::to_string(i) + "]";
                tiling.push_back(TilingPart{
                    subgroup_from_json(g, detail::require_field((*v)[i], "subgroup", where), where + ".subgroup"),
                    element_from_json(g, detail::require_field((*v)[i], "rep", where), where + ".rep")});
            }
        }
        return construct_r1(g, h1, a1, tiling);
    }
    throw error(errc::schema, "unknown construction kind \"" + kind + "\"");
}

// ---- text rendering -------------------------------------------------------

inline std::string set_label(std::size_t index) { return "A_" + std::to_string(index + 1); }

inline std::string render_elements(const ElementSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += to_string(s[i]);
    }
    return out + "}";
}

inline std::string render_group(const GroupSpec& g) {
    if (g.rank() == 0) return "Z_1";
    std::string out;
    for (std::size_t i = 0; i < g.rank(); ++i) {
        if (i) out += " x ";
        out += "Z_" + std::to_string(g.cyclic_orders()[i]);
    }
    return out;
}

inline std::string render_collection(const SetCollection& c) {
    std::string out = "group: " + render_group(c.group()) + "\n";
    for (std::size_t i = 0; i < c.set_count(); ++i)
        out += set_label(i) + " = " + render_elements(c.set(i)) + "\n";
    return out;
}

inline std::string render_verdicts(const DefinitionVerdict& def, const StructureVerdict& st) {
    std::string out = def.bimodal ? "bimodal\n" : "not bimodal\n";
    out += "definition check: ";
    if (def.bimodal) {
        out += "pass\n";
    } else {
        out += "fail (" + set_label(def.witness->set_index) + ", delta " + to_string(def.witness->delta) +
               ", count " + std::to_string(def.witness->count) + ")\n";
    }
    out += "structure check: ";
    if (st.bimodal) {
        out += "pass\n";
    } else {
        out += "fail (" + set_label(st.witness->set_index) + ", element " + to_string(st.witness->element) +
               ")\n";
    }
    return out;
}

inline std::string render_profile(const SetCollection& c, const DifferenceProfile& p) {
    const GroupSpec& g = c.group();
    std::string out;
    for (std::size_t i = 0; i < c.set_count(); ++i) {
        out += set_label(i) + " (size " + std::to_string(p.set_sizes()[i]) + "):";
        bool any = false;
        for (std::int64_t d = 1; d < g.order(); ++d) {
            const std::int64_t n = p.counts_for(i)[static_cast<std::size_t>(d)];
            if (n == 0) continue;
            out += std::string(any ? "," : "") + " " + to_string(g.element_at(d)) + " -> " + std::to_string(n);
            any = true;
        }
        if (!any) out += " all zero";
        out += "\n";
    }
    return out;
}

inline std::string render_case(TrichotomyCase c) {
    switch (c) {
    case TrichotomyCase::r0: return "r = 0";
    case TrichotomyCase::r1: return "r = 1";
    case TrichotomyCase::r_ge2: return "r >= 2";
    }
    return "?";
}

inline std::string render_report(const SetCollection& c, const ClassificationReport& r) {
    std::string out = "case: " + render_case(r.kind) + " (r = " + std::to_string(r.r) + ")\n";
    for (std::size_t i = 0; i < r.per_set.size(); ++i) {
        const SetStructure& s = r.per_set[i];
        out += set_label(i) + ": size " + std::to_string(s.size) + ", internal group " +
               render_elements(s.internal_group.elements()) + (s.full ? " (full)" : " (not full)") + "\n";
    }
    if (r.kernel) out += "kernel: " + render_elements(*r.kernel) + "\n";
    out += "sum group: " + render_elements(r.sum_group.elements()) + "\n";
    out += "canonical shift: " + to_string(r.canonical_shift) + "\n";
    if (!r.interior_sets.empty()) {
        out += "interior sets:";
        for (auto i : r.interior_sets) out += " " + set_label(i);
        out += "\n";
    }
    for (const auto& tile : r.coset_tiling) {
        out += "coset of " + to_string(tile.coset_rep) + ":";
        for (auto i : tile.set_indices) out += " " + set_label(i);
        out += "\n";
    }
    return out;
}

inline std::string render_census(const EnumerationResult& r) {
    std::string out = "candidates: " + std::to_string(r.candidates) + "\n";
    out += "bimodal: " + std::to_string(r.bimodal_count) + "\n";
    out += "by case: r0 " + std::to_string(r.by_case[0]) + ", r1 " + std::to_string(r.by_case[1]) +
           ", r>=2 " + std::to_string(r.by_case[2]) + "\n";
    out += "by (m, r):";
    bool first = true;
    for (const auto& [key, count] : r.by_m_r) {
        out += std::string(first ? " " : ", ") + "(" + std::to_string(key.first) + "," +
               std::to_string(key.second) + ") " + std::to_string(count);
        first = false;
    }
    out += "\n";
    return out;
}

} // namespace bimodal
