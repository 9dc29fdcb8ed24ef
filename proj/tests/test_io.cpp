#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "bimodal/enumerate.hpp"
#include "bimodal/examples.hpp"
#include "bimodal/io.hpp"
#include "support/helpers.hpp"

using namespace bimodal;
using testutil::cyclic_collection;
using testutil::el;
using testutil::els;

namespace {

auto schema_error = Catch::Matchers::Predicate<error>([](const error& e) { return e.code() == errc::schema; });

} // namespace

TEST_CASE("collection documents round-trip") {
    SECTION("rank one, bare integers") {
        const std::string doc = R"({"group": {"cyclic_orders": [10]}, "sets": [[1, 6], [3, 8], [4, 9]]})";
        SetCollection c = parse_collection(doc);
        REQUIRE(c == find_golden_example("z10-cosets")->collection);
        const std::string emitted = to_document(collection_to_json(c));
        REQUIRE(parse_collection(emitted) == c);
        REQUIRE(to_document(collection_to_json(parse_collection(emitted))) == emitted);
    }
    SECTION("higher rank, residue tuples") {
        const std::string doc =
            R"({"group": {"cyclic_orders": [3, 3]}, "sets": [[[1, 1], [2, 2]], [[0, 1], [0, 2]]]})";
        SetCollection c = parse_collection(doc);
        REQUIRE(c.set(0) == ElementSet{el({1, 1}), el({2, 2})});
        REQUIRE(parse_collection(to_document(collection_to_json(c))) == c);
    }
    SECTION("elements are emitted in canonical order regardless of input order") {
        SetCollection c = parse_collection(R"({"group": {"cyclic_orders": [10]}, "sets": [[6, 1]]})");
        REQUIRE(collection_to_json(c)["sets"][0] == json::array({1, 6}));
    }
    SECTION("golden example files parse to the built-in collections") {
        SetCollection z10 = parse_collection(testutil::read_file(testutil::golden_path("z10_collection.json")));
        REQUIRE(z10 == find_golden_example("z10-cosets")->collection);
        SetCollection z36 = parse_collection(testutil::read_file(testutil::golden_path("z36_collection.json")));
        REQUIRE(z36 == find_golden_example("z36-r1")->collection);
    }
}

TEST_CASE("collection documents reject bad shapes") {
    REQUIRE_THROWS_MATCHES(parse_document("not json at all"), error, schema_error);
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"sets": [[1]]})"), error, schema_error);
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [10]}})"), error, schema_error);
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": 10}, "sets": [[1]]})"), error,
                           schema_error);
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [10]}, "sets": [[1, "x"]]})"), error,
                           schema_error);
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [10]}, "sets": 3})"), error,
                           schema_error);
    // bare integers only name rank-1 elements
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [3, 3]}, "sets": [[1]]})"), error,
                           schema_error);
    // coordinate count must match the rank
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [3, 3]}, "sets": [[[1, 2, 0]]]})"),
                           error, schema_error);
    REQUIRE_THROWS_MATCHES(
        parse_collection(testutil::read_file(testutil::golden_path("bad_schema.json"))), error, schema_error);
}

TEST_CASE("collection validation errors name the offender") {
    auto code_is = [](errc c) {
        return Catch::Matchers::Predicate<error>([c](const error& e) { return e.code() == c; });
    };
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [10]}, "sets": [[1], [1]]})"), error,
                           code_is(errc::not_disjoint));
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [10]}, "sets": [[1], []]})"), error,
                           code_is(errc::empty_set));
    REQUIRE_THROWS_MATCHES(parse_collection(R"({"group": {"cyclic_orders": [10]}, "sets": [[10]]})"), error,
                           code_is(errc::invalid_element));
    try {
        parse_collection(R"({"group": {"cyclic_orders": [10]}, "sets": [[1, 6], [6]]})");
        FAIL("expected a disjointness error");
    } catch (const error& e) {
        REQUIRE(std::string(e.what()).find("set 1") != std::string::npos);
        REQUIRE(std::string(e.what()).find("element 6") != std::string::npos);
    }
}

TEST_CASE("verdict documents") {
    SetCollection good = find_golden_example("z10-cosets")->collection;
    json ok = verdicts_to_json(good, is_bimodal_by_definition(good), is_bimodal_by_structure(good));
    REQUIRE(ok["bimodal"] == true);
    REQUIRE(ok["definition"]["witness"].is_null());
    REQUIRE(ok["structure"]["witness"].is_null());

    SetCollection bad = cyclic_collection(10, {{1, 6}, {3, 8}, {4}});
    json no = verdicts_to_json(bad, is_bimodal_by_definition(bad), is_bimodal_by_structure(bad));
    REQUIRE(no["bimodal"] == false);
    REQUIRE(no["definition"]["witness"]["set"] == 0);
    REQUIRE(no["definition"]["witness"]["delta"] == 2);
    REQUIRE(no["definition"]["witness"]["count"] == 1);
    REQUIRE(no["structure"]["witness"]["set"] == 0);
    REQUIRE(no["structure"]["witness"]["element"] == 4);
}

TEST_CASE("profile documents keep only nonzero counts") {
    SetCollection c = find_golden_example("z10-cosets")->collection;
    json p = profile_to_json(c, difference_profile(c));
    REQUIRE(p["profile"].size() == 3);
    REQUIRE(p["profile"][2]["set"] == 2);
    REQUIRE(p["profile"][2]["size"] == 2);
    REQUIRE(p["profile"][2]["counts"] ==
            json::array({json::array({1, 2}), json::array({3, 2}), json::array({6, 2}), json::array({8, 2})}));
}

TEST_CASE("classification report documents") {
    SetCollection c = find_golden_example("z36-r1")->collection;
    json r = report_to_json(c, classify(c));
    REQUIRE(r["case"] == "r1");
    REQUIRE(r["r"] == 1);
    REQUIRE(r["reorder"][0] == 0);
    REQUIRE(r["sets"].size() == 9);
    REQUIRE(r["sets"][0]["full"] == false);
    REQUIRE(r["sets"][0]["internal_group"].size() == 12);
    REQUIRE(r["kernel"] == json::array({0, 18}));
    REQUIRE(r["sum_group"].size() == 12);
    REQUIRE(r["canonical_shift"] == 0);
    REQUIRE(r["coset_tiling"].size() == 1);
    REQUIRE(r["coset_tiling"][0]["coset"] == 1);
    REQUIRE(r["coset_tiling"][0]["sets"] == json::array({1, 2, 3, 4, 5, 6, 7, 8}));

    SetCollection r0 = find_golden_example("z10-cosets")->collection;
    json jr0 = report_to_json(r0, classify(r0));
    REQUIRE(jr0["case"] == "r0");
    REQUIRE(jr0["kernel"].is_null());
    REQUIRE(jr0["interior_sets"] == json::array());
}

TEST_CASE("scope documents") {
    SECTION("subset scope with optional knobs") {
        EnumerationScope s = scope_from_json(parse_document(
            R"({"group": {"cyclic_orders": [6]}, "support": {"max_support": 4},
                "max_parts": 3, "dedupe": "shift", "budget": 1000, "workers": 2, "materialize": true})"));
        REQUIRE(s.group == GroupSpec::cyclic(6));
        REQUIRE(s.mode == SupportMode::all_subsets);
        REQUIRE(s.max_support == 4);
        REQUIRE(s.max_parts == 3);
        REQUIRE(s.dedupe == DedupeMode::up_to_shift);
        REQUIRE(s.budget == 1000);
        REQUIRE(s.workers == 2);
        REQUIRE(s.materialize);
    }
    SECTION("fixed scope") {
        EnumerationScope s = scope_from_json(parse_document(
            R"({"group": {"cyclic_orders": [10]}, "support": {"elements": [9, 1, 3, 4, 6, 8]}})"));
        REQUIRE(s.mode == SupportMode::fixed);
        REQUIRE(s.fixed_support == els({1, 3, 4, 6, 8, 9}));
        REQUIRE(s.budget == 10'000'000); // default
        REQUIRE(s.dedupe == DedupeMode::none);
    }
    SECTION("support needs exactly one of elements and max_support") {
        REQUIRE_THROWS_MATCHES(scope_from_json(parse_document(
                                   R"({"group": {"cyclic_orders": [6]}, "support": {}})")),
                               error, schema_error);
        REQUIRE_THROWS_MATCHES(
            scope_from_json(parse_document(
                R"({"group": {"cyclic_orders": [6]}, "support": {"elements": [1], "max_support": 2}})")),
            error, schema_error);
    }
    SECTION("bad knobs") {
        REQUIRE_THROWS_MATCHES(
            scope_from_json(parse_document(
                R"({"group": {"cyclic_orders": [6]}, "support": {"max_support": 4}, "dedupe": "orbit"})")),
            error, schema_error);
        REQUIRE_THROWS_MATCHES(
            scope_from_json(parse_document(
                R"({"group": {"cyclic_orders": [6]}, "support": {"max_support": 4}, "materialize": 1})")),
            error, schema_error);
    }
}

TEST_CASE("census documents") {
    EnumerationScope scope{GroupSpec::cyclic(6)};
    scope.max_support = 4;
    json j = census_to_json(scope, enumerate_bimodal(scope));
    REQUIRE(j["group"] == json{{"cyclic_orders", json::array({6})}});
    REQUIRE(j["scope"]["mode"] == "all_subsets");
    REQUIRE(j["scope"]["max_support"] == 4);
    REQUIRE(j["scope"]["dedupe"] == "none");
    REQUIRE(j["candidates"] == 361);
    REQUIRE(j["bimodal"] == 115);
    REQUIRE(j["by_case"] == json{{"r0", 70}, {"r1", 45}, {"r_ge2", 0}});
    REQUIRE(j["by_m_r"][0] == json{{"m", 1}, {"r", 0}, {"count", 11}});
    REQUIRE(!j.contains("collections"));

    scope.materialize = true;
    json with = census_to_json(scope, enumerate_bimodal(scope));
    REQUIRE(with["collections"].size() == 115);
    REQUIRE(collection_from_json(with["collections"][0]).group() == scope.group);
}

TEST_CASE("construction specs from documents") {
    json cosets{{"group", {{"cyclic_orders", json::array({10})}}},
                {"subgroup", json::array({5})},
                {"reps", json::array({1, 3, 4})}};
    REQUIRE(construct_from_json("cosets", cosets) == find_golden_example("z10-cosets")->collection);

    SetCollection star = construct_from_json(
        "star", parse_document(testutil::read_file(testutil::golden_path("z12_star_spec.json"))));
    REQUIRE(star == find_golden_example("z12-mixed")->collection);

    SetCollection r1 = construct_from_json(
        "r1", parse_document(testutil::read_file(testutil::golden_path("z36_r1_spec.json"))));
    REQUIRE(r1 == find_golden_example("z36-r1")->collection);

    REQUIRE_THROWS_MATCHES(construct_from_json("rings", json::object()), error, schema_error);
    REQUIRE_THROWS_MATCHES(construct_from_json("star", json{{"group", {{"cyclic_orders", json::array({12})}}},
                                                            {"subgroups", json::array()}}),
                           error, schema_error); // kernel missing
}

TEST_CASE("text renderings") {
    SetCollection c = find_golden_example("z10-cosets")->collection;
    REQUIRE(render_collection(c) == "group: Z_10\nA_1 = {1, 6}\nA_2 = {3, 8}\nA_3 = {4, 9}\n");
    REQUIRE(render_profile(c, difference_profile(c)).find("A_3 (size 2): 1 -> 2, 3 -> 2, 6 -> 2, 8 -> 2\n") !=
            std::string::npos);
    REQUIRE(render_verdicts(is_bimodal_by_definition(c), is_bimodal_by_structure(c)) ==
            "bimodal\ndefinition check: pass\nstructure check: pass\n");

    SetCollection bad = cyclic_collection(10, {{1, 6}, {3, 8}, {4}});
    REQUIRE(render_verdicts(is_bimodal_by_definition(bad), is_bimodal_by_structure(bad)) ==
            "not bimodal\ndefinition check: fail (A_1, delta 2, count 1)\nstructure check: fail (A_1, element 4)\n");

    std::string report = render_report(c, classify(c));
    REQUIRE(report.find("case: r = 0 (r = 0)") != std::string::npos);
    REQUIRE(report.find("A_1: size 2, internal group {0, 5} (full)") != std::string::npos);

    EnumerationScope scope{GroupSpec::cyclic(6)};
    scope.max_support = 4;
    std::string census = render_census(enumerate_bimodal(scope));
    REQUIRE(census.find("candidates: 361\n") != std::string::npos);
    REQUIRE(census.find("bimodal: 115\n") != std::string::npos);
    REQUIRE(census.find("by case: r0 70, r1 45, r>=2 0\n") != std::string::npos);

    SetCollection tuple = testutil::product_collection({3, 3}, {{{1, 1}, {2, 2}}});
    REQUIRE(render_collection(tuple) == "group: Z_3 x Z_3\nA_1 = {(1,1), (2,2)}\n");
}
