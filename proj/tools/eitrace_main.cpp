// eitrace: command line front end for the trace engine.
//
// Exit codes: 0 success or true verdict, 1 false verdict, 2 input error.

#include "eitrace/coweight.hpp"
#include "eitrace/errors.hpp"
#include "eitrace/harness.hpp"
#include "eitrace/json_io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

using namespace eitrace;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct Inputs {
    std::string category;
    std::string rep;
    std::string endo;
};

CategoryPtr load_category(const std::string& path)
{
    return make_category(parse_category(read_text_file(path)));
}

TwistedEndo load_endo(const Inputs& in, const CategoryPtr& base)
{
    const Representation rep = parse_representation(read_text_file(in.rep), base);
    return parse_endo(read_text_file(in.endo), rep);
}

void emit(const Json& j)
{
    std::cout << j.dump(2) << '\n';
}

Json components_json(const FinCategory& c, const Components& comps)
{
    Json j = Json::object();
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        j[c.object_name(o)] = comps.component_of[o];
    return {{"schemaVersion", 1}, {"components", comps.count}, {"componentOf", j}};
}

Json index_json(const FinCategory& c, const EndoClassIndex& index)
{
    Json entries = Json::array();
    for (const auto& e : index.entries) {
        Json members = Json::array();
        for (auto m : e.members)
            members.push_back(c.morphism(m).name);
        entries.push_back({{"i", c.object_name(e.object)},
                           {"h", c.morphism(e.representative).name},
                           {"members", members},
                           {"classSize", e.class_size},
                           {"centralizerOrder", e.centralizer_order},
                           {"groupOrder", e.group_order}});
    }
    return {{"schemaVersion", 1}, {"entries", entries}};
}

int run_validate(const std::string& path)
{
    const FinCategory c = parse_category(read_text_file(path));
    const ValidationReport report = validate(c);
    Json j{{"schemaVersion", 1}, {"valid", report.ok()}, {"violations", report.violations}};
    if (report.ok()) {
        const EIReport ei = ei_report(c);
        j["ei"] = ei.ei;
        j["isoClasses"] = iso_classes(c).classes.size();
        j["skeletal"] = is_skeletal(c);
    }
    emit(j);
    return report.ok() ? kOk : kFalse;
}

int run_construct(const std::string& what, const std::string& path)
{
    const CategoryPtr c = load_category(path);
    require_valid(*c);
    if (what == "tw")
        std::cout << serialize(*twisted_arrow(c).category);
    else if (what == "d")
        std::cout << serialize(*d_category(*c).category);
    else if (what == "endo")
        std::cout << serialize(*endo_category(*c).category);
    else if (what == "pi0")
        emit(components_json(*c, pi0(*c)));
    else if (what == "index")
        emit(index_json(*c, endo_class_index(*c)));
    else if (what == "char")
        emit({{"schemaVersion", 1}, {"characteristic", characteristic(*c)}});
    return kOk;
}

int run_coweighting(const std::string& path, const std::string& method)
{
    const CategoryPtr c = load_category(path);
    require_valid(*c);
    const TheoremCoefficients t = theorem_coefficients(*c);
    const auto& lambda = method == "mobius" ? t.lambda_mobius : t.lambda_solve;
    Json entries = Json::array();
    for (std::size_t k = 0; k < t.index.size(); ++k)
        entries.push_back({{"i", c->object_name(t.index.entries[k].object)},
                           {"h", c->morphism(t.index.entries[k].representative).name},
                           {"lambda", format_rational(lambda[k])}});
    Json j{{"schemaVersion", 1}, {"method", method}, {"entries", entries}, {"zeta", matrix_to_json(t.zeta)}};
    if (method == "both")
        j["methodAgreement"] = t.lambda_solve == t.lambda_mobius;
    j["characteristic"] = t.characteristic;
    emit(j);
    return kOk;
}

int run_local_traces(const Inputs& in)
{
    const CategoryPtr c = load_category(in.category);
    require_valid(*c);
    const TwistedEndo f = load_endo(in, c);
    const ValidationReport vr = validate_endo(f);
    if (!vr.ok())
        throw InvalidInput("invalid endomorphism: " + vr.violations.front());
    const LocalTraceTable t = local_trace_table(f);
    Json entries = Json::array();
    for (std::size_t k = 0; k < t.index.size(); ++k)
        entries.push_back({{"i", c->object_name(t.index.entries[k].object)},
                           {"h", c->morphism(t.index.entries[k].representative).name},
                           {"trace", matrix_to_json(t.values[k])}});
    emit({{"schemaVersion", 1}, {"entries", entries}});
    return kOk;
}

int run_hocolim(const Inputs& in, std::string oracle, std::uint64_t seed)
{
    const CategoryPtr c = load_category(in.category);
    require_valid(*c);
    const TwistedEndo f = load_endo(in, c);
    const ValidationReport vr = validate_endo(f);
    if (!vr.ok())
        throw InvalidInput("invalid endomorphism: " + vr.violations.front());
    if (oracle == "auto")
        oracle = c->num_objects() == 1 && is_ei(*c) ? "group" : is_loop_free(*c) ? "bar" : "resolution";
    Json j{{"schemaVersion", 1}, {"oracle", oracle}};
    if (oracle == "group") {
        j["trace"] = matrix_to_json(hocolim_trace_group(f));
    } else {
        const ChainEndo u = oracle == "bar" ? bar_complex(f)
                                            : resolution_complex(f, projective_resolution(
                                                                        make_category(opposite(*c)), {0, seed}));
        j["trace"] = matrix_to_json(lefschetz_trace(u));
        j["complexDims"] = u.complex().dims();
        j["homologyDims"] = homology_dims(u.complex());
    }
    emit(j);
    return kOk;
}

int run_verify(const Inputs& in, std::uint64_t seed)
{
    const CategoryPtr c = load_category(in.category);
    require_valid(*c);
    const TwistedEndo f = load_endo(in, c);
    const ValidationReport vr = validate_endo(f);
    if (!vr.ok())
        throw InvalidInput("invalid endomorphism: " + vr.violations.front());
    VerifyOptions options;
    options.resolution_options.seed = seed;
    const TraceReport report = verify_theorem(f, options);
    emit(report_to_json(report, *c));
    return report.audits_pass() ? kOk : kFalse;
}

int run_fuzz(const std::string& kinds, FuzzOptions options)
{
    options.kinds.clear();
    std::stringstream ss(kinds);
    for (std::string k; std::getline(ss, k, ',');) {
        auto kind = parse_kind(k);
        if (!kind)
            throw InvalidInput("unknown category kind \"" + k + "\"");
        options.kinds.push_back(*kind);
    }
    const auto cases = fuzz(options);
    emit(fuzz_to_json(cases, options));
    for (const auto& c : cases)
        if (!c.verdict || !c.audits)
            return kFalse;
    return kOk;
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("EI_TRACE_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput("EI_TRACE_SEED is not an unsigned integer");
        }
    }
    return 42;
}

int report_error(const char* kind, const std::exception& e)
{
    Json j{{"error", kind}, {"message", e.what()}};
    std::cerr << j.dump() << '\n';
    return kInputError;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact traces of homotopy colimits over finite EI categories"};
    app.require_subcommand(1);

    std::string cat_path;
    Inputs in;
    std::uint64_t seed = 0;
    bool seed_given = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the category axioms");
    validate_cmd->add_option("category", cat_path, "category file")->required();

    std::string construction;
    auto* construct_cmd = app.add_subcommand("construct", "Build a derived category or summary");
    construct_cmd->add_option("what", construction, "tw | d | endo | pi0 | index | char")
        ->required()
        ->check(CLI::IsMember({"tw", "d", "endo", "pi0", "index", "char"}));
    construct_cmd->add_option("category", cat_path, "category file")->required();

    std::string method = "both";
    auto* coweight_cmd = app.add_subcommand("coweighting", "Coefficients of the trace formula");
    coweight_cmd->add_option("category", cat_path, "category file")->required();
    coweight_cmd->add_option("--method", method, "solve | mobius | both")
        ->check(CLI::IsMember({"solve", "mobius", "both"}));

    const auto add_inputs = [&](CLI::App* cmd) {
        cmd->add_option("category", in.category, "category file")->required();
        cmd->add_option("rep", in.rep, "representation file")->required();
        cmd->add_option("endo", in.endo, "endomorphism file")->required();
    };
    auto* local_cmd = app.add_subcommand("local-traces", "Local trace table");
    add_inputs(local_cmd);

    std::string oracle = "auto";
    auto* hocolim_cmd = app.add_subcommand("hocolim-trace", "Trace of the homotopy colimit");
    add_inputs(hocolim_cmd);
    hocolim_cmd->add_option("--oracle", oracle, "resolution | bar | group | auto")
        ->check(CLI::IsMember({"resolution", "bar", "group", "auto"}));
    hocolim_cmd->add_option("--seed", seed, "generator reshuffle seed")->each([&](const std::string&) { seed_given = true; });

    auto* verify_cmd = app.add_subcommand("verify", "Compare the formula with every applicable oracle");
    add_inputs(verify_cmd);
    verify_cmd->add_option("--seed", seed, "generator reshuffle seed")->each([&](const std::string&) { seed_given = true; });

    FuzzOptions fuzz_options;
    std::string kinds = "poset,group,product,groupoid";
    auto* fuzz_cmd = app.add_subcommand("fuzz", "Random end-to-end checks");
    fuzz_cmd->add_option("--kinds", kinds, "comma separated: poset,group,cyclic,symmetric,product,groupoid");
    fuzz_cmd->add_option("--cases", fuzz_options.cases, "number of cases");
    fuzz_cmd->add_option("--seed", seed, "run seed")->each([&](const std::string&) { seed_given = true; });
    fuzz_cmd->add_option("--maxdim", fuzz_options.maxdim, "largest fiber dimension")->check(CLI::Range(1, 8));
    fuzz_cmd->add_option("--threads", fuzz_options.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (!seed_given)
            seed = default_seed();
        if (*validate_cmd)
            return run_validate(cat_path);
        if (*construct_cmd)
            return run_construct(construction, cat_path);
        if (*coweight_cmd)
            return run_coweighting(cat_path, method);
        if (*local_cmd)
            return run_local_traces(in);
        if (*hocolim_cmd)
            return run_hocolim(in, oracle, seed);
        if (*verify_cmd)
            return run_verify(in, seed);
        if (*fuzz_cmd) {
            fuzz_options.seed = seed;
            return run_fuzz(kinds, fuzz_options);
        }
    } catch (const ParseError& e) {
        return report_error("ParseError", e);
    } catch (const NotEI& e) {
        return report_error("NotEI", e);
    } catch (const InvalidInput& e) {
        return report_error("InvalidInput", e);
    } catch (const ShapeError& e) {
        return report_error("ShapeError", e);
    } catch (const Error& e) {
        return report_error("Error", e);
    }
    return kInputError;
}
