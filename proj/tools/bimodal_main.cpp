#include <cstdint>
#include <fstream>
#include <limits>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bimodal/classify.hpp"
#include "bimodal/collection.hpp"
#include "bimodal/construct.hpp"
#include "bimodal/enumerate.hpp"
#include "bimodal/error.hpp"
#include "bimodal/examples.hpp"
#include "bimodal/group.hpp"
#include "bimodal/io.hpp"

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw bimodal::error(bimodal::errc::invalid_argument, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int run_verify(const std::string& path, bool as_json) {
    bimodal::SetCollection c = bimodal::parse_collection(slurp(path));
    bimodal::DefinitionVerdict def = bimodal::is_bimodal_by_definition(c);
    bimodal::StructureVerdict st = bimodal::is_bimodal_by_structure(c);
    if (as_json)
        std::cout << bimodal::to_document(bimodal::verdicts_to_json(c, def, st));
    else
        std::cout << bimodal::render_verdicts(def, st);
    return def.bimodal && st.bimodal ? 0 : 1;
}

int run_profile(const std::string& path, bool as_json) {
    bimodal::SetCollection c = bimodal::parse_collection(slurp(path));
    bimodal::DifferenceProfile p = bimodal::difference_profile(c);
    if (as_json)
        std::cout << bimodal::to_document(bimodal::profile_to_json(c, p));
    else
        std::cout << bimodal::render_profile(c, p);
    return 0;
}

int run_classify(const std::string& path, bool as_json) {
    bimodal::SetCollection c = bimodal::parse_collection(slurp(path));
    bimodal::ClassificationReport r = bimodal::classify(c);
    if (as_json)
        std::cout << bimodal::to_document(bimodal::report_to_json(c, r));
    else
        std::cout << bimodal::render_report(c, r);
    return 0;
}

int run_construct(const std::string& kind, const std::string& path, bool as_json) {
    bimodal::json spec = bimodal::parse_document(slurp(path));
    bimodal::SetCollection c = bimodal::construct_from_json(kind, spec);
    if (as_json)
        std::cout << bimodal::to_document(bimodal::collection_to_json(c));
    else
        std::cout << bimodal::render_collection(c);
    return 0;
}

struct EnumerateOverrides {
    std::int64_t budget = -1;
    std::string dedupe;
    int workers = -1;
    bool materialize = false;
    std::string stream_path;
};

int run_enumerate(const std::string& path, const EnumerateOverrides& o, bool as_json) {
    bimodal::EnumerationScope scope = bimodal::scope_from_json(bimodal::parse_document(slurp(path)));
    if (o.budget >= 0) scope.budget = static_cast<std::uint64_t>(o.budget);
    if (o.dedupe == "shift") scope.dedupe = bimodal::DedupeMode::up_to_shift;
    if (o.dedupe == "none") scope.dedupe = bimodal::DedupeMode::none;
    if (o.workers > 0) scope.workers = static_cast<unsigned>(o.workers);
    if (o.materialize) scope.materialize = true;
    const bool streaming = !o.stream_path.empty();
    bimodal::EnumerationScope run_scope = scope;
    if (streaming) run_scope.materialize = true;
    bimodal::EnumerationResult result = bimodal::enumerate_bimodal(run_scope);
    if (streaming) {
        std::ofstream out(o.stream_path, std::ios::binary);
        if (!out)
            throw bimodal::error(bimodal::errc::invalid_argument, "cannot open " + o.stream_path + " for writing");
        for (const auto& c : result.collections) out << bimodal::collection_to_json(c).dump() << "\n";
        if (!scope.materialize) result.collections.clear();
    }
    if (as_json)
        std::cout << bimodal::to_document(bimodal::census_to_json(scope, result));
    else
        std::cout << bimodal::render_census(result);
    return 0;
}

int run_examples(const std::string& name, bool as_json) {
    std::vector<const bimodal::GoldenExample*> picked;
    if (name.empty()) {
        for (const auto& e : bimodal::golden_examples()) picked.push_back(&e);
    } else {
        const bimodal::GoldenExample* e = bimodal::find_golden_example(name);
        if (e == nullptr)
            throw bimodal::error(bimodal::errc::invalid_argument, "no example named \"" + name + "\"");
        picked.push_back(e);
    }
    bool all_ok = true;
    bimodal::json rows = bimodal::json::array();
    for (const auto* e : picked) {
        std::string failure;
        try {
            bimodal::DefinitionVerdict def = bimodal::is_bimodal_by_definition(e->collection);
            bimodal::StructureVerdict st = bimodal::is_bimodal_by_structure(e->collection);
            if (!def.bimodal || !st.bimodal) failure = "expected bimodal, checker said no";
            bimodal::ClassificationReport r = bimodal::classify(e->collection);
            if (failure.empty() && r.kind != e->expected_case) failure = "wrong case";
            if (failure.empty() && r.r != e->expected_r) failure = "wrong r";
            if (failure.empty() && e->expected_kernel && (!r.kernel || *r.kernel != *e->expected_kernel))
                failure = "wrong kernel";
            if (failure.empty() && r.sum_group.order() != e->expected_sum_order)
                failure = "wrong sum group order";
        } catch (const bimodal::error& err) {
            failure = err.what();
        }
        all_ok = all_ok && failure.empty();
        if (as_json) {
            rows.push_back(bimodal::json{{"name", e->name},
                                         {"description", e->description},
                                         {"pass", failure.empty()},
                                         {"failure", failure.empty() ? bimodal::json(nullptr) : bimodal::json(failure)}});
        } else {
            std::cout << (failure.empty() ? "ok   " : "FAIL ") << e->name << " (" << e->description << ")";
            if (!failure.empty()) std::cout << ": " << failure;
            std::cout << "\n";
        }
    }
    if (as_json) std::cout << bimodal::to_document(rows);
    return all_ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"decide, classify, construct and enumerate bimodal collections in finite abelian groups"};
    app.require_subcommand(1);

    std::string file, kind, example_name;
    bool as_json = false, as_text = false;
    EnumerateOverrides overrides;

    auto add_output_flags = [&](CLI::App* sub) {
        CLI::Option* j = sub->add_flag("--json", as_json, "emit a JSON document");
        sub->add_flag("--text", as_text, "emit plain text (default)")->excludes(j);
    };

    CLI::App* verify = app.add_subcommand("verify", "run both bimodality checkers on a collection");
    verify->add_option("file", file, "collection document")->required();
    add_output_flags(verify);

    CLI::App* profile = app.add_subcommand("profile", "print the difference profile of a collection");
    profile->add_option("file", file, "collection document")->required();
    add_output_flags(profile);

    CLI::App* classify = app.add_subcommand("classify", "classify a bimodal collection");
    classify->add_option("file", file, "collection document")->required();
    add_output_flags(classify);

    CLI::App* construct = app.add_subcommand("construct", "build a collection from a spec");
    construct
        ->add_option("kind", kind,
                     "one of: cosets, group-partition, mixed-partition, shift, subdivide, star, r1")
        ->required();
    construct->add_option("file", file, "construction spec document")->required();
    add_output_flags(construct);

    CLI::App* enumerate = app.add_subcommand("enumerate", "exhaustively enumerate bimodal collections");
    enumerate->add_option("file", file, "enumeration scope document")->required();
    enumerate->add_option("--budget", overrides.budget, "candidate budget (0 = unlimited)");
    enumerate->add_option("--dedupe", overrides.dedupe, "shift | none")
        ->check(CLI::IsMember({"shift", "none"}));
    enumerate->add_option("--workers", overrides.workers, "worker threads")
        ->check(CLI::Range(1, std::numeric_limits<int>::max()));
    enumerate->add_flag("--materialize", overrides.materialize, "include surviving collections in the census");
    enumerate->add_option("--stream", overrides.stream_path, "write survivors to a file, one JSON per line");
    add_output_flags(enumerate);

    CLI::App* examples = app.add_subcommand("examples", "check the built-in worked examples");
    examples->add_option("name", example_name, "run a single example");
    add_output_flags(examples);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return run_verify(file, as_json);
        if (profile->parsed()) return run_profile(file, as_json);
        if (classify->parsed()) return run_classify(file, as_json);
        if (construct->parsed()) return run_construct(kind, file, as_json);
        if (enumerate->parsed()) return run_enumerate(file, overrides, as_json);
        if (examples->parsed()) return run_examples(example_name, as_json);
    } catch (const bimodal::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == bimodal::errc::not_bimodal ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
