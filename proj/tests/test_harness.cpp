#include "eitrace/errors.hpp"
#include "eitrace/harness.hpp"
#include "eitrace/json_io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace eitrace;
using eitrace::testing::data_file;
using eitrace::testing::named;

TEST_CASE("the pushout datum satisfies the trace formula")
{
    const CategoryPtr c = make_category(parse_category(read_text_file(data_file("pushout.json"))));
    const Representation a = parse_representation(read_text_file(data_file("pushout_rep.json")), c);
    const TwistedEndo f = parse_endo(read_text_file(data_file("pushout_endo.json")), a);
    const TraceReport r = verify_theorem(f);
    CHECK(r.formula == Matrix::from_ints({{5}}));
    CHECK(r.verdict());
    CHECK(r.audits_pass());
    for (const auto& o : r.oracles)
        if (o.applicable) {
            REQUIRE(o.trace);
            CHECK_MESSAGE(*o.trace == r.formula, o.name);
        }
}

TEST_CASE("the oracles applicable to a group")
{
    const TraceReport r = verify_theorem(generate_diagram(named("S3"), 4, 3));
    std::set<std::string> applicable;
    for (const auto& o : r.oracles)
        if (o.applicable)
            applicable.insert(o.name);
    CHECK(applicable == std::set<std::string>{"resolution", "group"});
    CHECK(r.audits_pass());
}

TEST_CASE("verify rejects non-EI categories")
{
    std::vector<MorphismInfo> mor{{"e", 0, 0}, {"z", 0, 0}};
    const CategoryPtr monoid = make_category(
        FinCategory::build({"*"}, mor, {0}, [](MorphismId g, MorphismId f) { return MorphismId(g | f); }));
    CHECK_THROWS_AS(verify_theorem(TwistedEndo::scalar(Representation::constant(monoid), 1)), NotEI);
}

TEST_CASE("witnesses on S3 and the pushout shape")
{
    for (const char* name : {"S3", "pushout", "C2-free-on-arrows"}) {
        const auto checks = check_witnesses(named(name), 2);
        CHECK_FALSE(checks.empty());
        for (const auto& w : checks) {
            CHECK_MESSAGE(w.local_traces_match_zeta, name);
            CHECK(w.oracles_return_identity);
            CHECK(w.coweighting_sum == 1);
        }
    }
}

TEST_CASE("a random diagram over a poset times C2")
{
    const CategoryPtr c = make_category(generate_category(CategoryKind::Product, 7));
    CHECK(validate(*c).ok());
    const TwistedEndo f = generate_diagram(c, 7);
    CHECK(validate_endo(f).ok());
    CHECK(verify_theorem(f).verdict());
}

TEST_CASE("generated categories are valid EI categories")
{
    for (auto kind : {CategoryKind::Poset, CategoryKind::Group, CategoryKind::Cyclic, CategoryKind::Symmetric,
                      CategoryKind::Product, CategoryKind::Groupoid})
        for (std::uint64_t seed = 0; seed < 15; ++seed) {
            const FinCategory c = generate_category(kind, seed);
            CHECK_MESSAGE(validate(c).ok(), kind_name(kind), " ", seed);
            CHECK(is_ei(c));
        }
}

TEST_CASE("generators are deterministic in the seed")
{
    CHECK(generate_category(CategoryKind::Poset, 9) == generate_category(CategoryKind::Poset, 9));
    const CategoryPtr c = named("chain2xC2");
    const TwistedEndo a = generate_diagram(c, 5), b = generate_diagram(c, 5);
    CHECK(a.rep().actions() == b.rep().actions());
    CHECK(a.components() == b.components());
}

TEST_CASE("S3 multiplication table")
{
    const FinCategory s3 = symmetric_group(3);
    CHECK(validate(s3).ok());
    const GroupTable g = ei_report(s3).groups[0];
    std::size_t involutions = 0;
    for (std::size_t a = 1; a < 6; ++a)
        involutions += g.table[a][a] == 0;
    CHECK(involutions == 3);
    bool abelian = true;
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b)
            abelian = abelian && g.table[a][b] == g.table[b][a];
    CHECK_FALSE(abelian);
}

TEST_CASE("a translation groupoid has one iso class per orbit")
{
    const FinCategory g = translation_groupoid(2, {1, 0, 2});
    CHECK(validate(g).ok());
    CHECK(iso_classes(g).classes.size() == 2);
    CHECK(g.num_morphisms() == 6);
}

TEST_CASE("generated endomorphisms are natural")
{
    for (const auto& e : catalog())
        for (std::uint64_t seed = 0; seed < 6; ++seed)
            CHECK_MESSAGE(validate_endo(generate_diagram(e.category, seed, 4)).ok(), e.name);
}

TEST_CASE("free diagrams need a category without composites")
{
    CHECK_THROWS_AS(generate_free_diagram(named("chain3"), {1, 1, 1}, 1), InvalidInput);
    CHECK(validate_endo(generate_free_diagram(named("pushout"), {2, 0, 3}, 1)).ok());
}

TEST_CASE("natural endomorphisms of the regular presheaf of C2 form a 2-dimensional space")
{
    const Representation a(make_category(cyclic_group(2)), {2},
                           {Matrix::identity(2), Matrix::from_ints({{0, 1}, {1, 0}})});
    CHECK(natural_endomorphisms(a).size() == 2);
}

TEST_CASE("reports are deterministic")
{
    const CategoryPtr c = named("vee");
    const TwistedEndo f = generate_diagram(c, 11);
    CHECK(report_to_json(verify_theorem(f), *c).dump() == report_to_json(verify_theorem(f), *c).dump());
}

TEST_CASE("fuzz results do not depend on the thread count")
{
    FuzzOptions options;
    options.cases = 16;
    options.seed = 5;
    options.threads = 1;
    const auto serial = fuzz(options);
    options.threads = 4;
    const auto parallel = fuzz(options);
    CHECK(fuzz_to_json(serial, options).dump() == fuzz_to_json(parallel, options).dump());
    for (const auto& c : serial) {
        CHECK_MESSAGE(c.verdict, c.index, " ", c.error);
        CHECK(c.audits);
    }
    CHECK(case_seed(5, 3) == serial[3].seed);
}

TEST_CASE("category kinds parse by name")
{
    CHECK(parse_kind("groupoid") == CategoryKind::Groupoid);
    CHECK_FALSE(parse_kind("ring"));
    CHECK(kind_name(CategoryKind::Product) == "product");
}
