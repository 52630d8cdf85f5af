#include "eitrace/errors.hpp"
#include "eitrace/fincat.hpp"
#include "eitrace/json_io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>

using namespace eitrace;
using eitrace::testing::data_file;
using eitrace::testing::named;

namespace {

const char* kPushoutText = R"({
  "objects": ["11", "01", "10"],
  "morphisms": [
    {"id": "id11", "src": "11", "tgt": "11"},
    {"id": "id01", "src": "01", "tgt": "01"},
    {"id": "id10", "src": "10", "tgt": "10"},
    {"id": "a", "src": "01", "tgt": "11"},
    {"id": "b", "src": "10", "tgt": "11"}
  ],
  "identities": {"11": "id11", "01": "id01", "10": "id10"},
  "compose": []
})";

bool contains(const std::vector<std::string>& v, const std::string& needle)
{
    return std::any_of(v.begin(), v.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

} // namespace

TEST_CASE("the pushout shape is a valid category")
{
    const FinCategory c = parse_category(kPushoutText);
    CHECK(c.num_objects() == 3);
    CHECK(c.num_morphisms() == 5);
    CHECK(validate(c).ok());
    CHECK(c.hom_count(1, 0) == 1);
    CHECK(c.hom_count(0, 1) == 0);
}

TEST_CASE("C3 is a valid category and a group")
{
    const FinCategory c3 = cyclic_group(3);
    CHECK(validate(c3).ok());
    const EIReport r = ei_report(c3);
    CHECK(r.ei);
    REQUIRE(r.groups.size() == 1);
    CHECK(r.groups[0].order() == 3);
}

TEST_CASE("a broken unit law is reported with its witnesses")
{
    const FinCategory c = parse_category(read_text_file(data_file("broken_unit.json")));
    const ValidationReport r = validate(c);
    CHECK_FALSE(r.ok());
    CHECK(contains(r.violations, "unit"));
    CHECK_THROWS_AS(require_valid(c), InvalidInput);
}

TEST_CASE("a missing composite is reported")
{
    const FinCategory c = parse_category(R"({
      "objects": ["x", "y", "z"],
      "morphisms": [{"id": "ix", "src": "x", "tgt": "x"}, {"id": "iy", "src": "y", "tgt": "y"},
                    {"id": "iz", "src": "z", "tgt": "z"}, {"id": "f", "src": "x", "tgt": "y"},
                    {"id": "g", "src": "y", "tgt": "z"}],
      "identities": {"x": "ix", "y": "iy", "z": "iz"},
      "compose": []})");
    const ValidationReport r = validate(c);
    CHECK_FALSE(r.ok());
    CHECK(contains(r.violations, "g o f"));
}

TEST_CASE("the idempotent monoid {e, z} is a category but not EI")
{
    const FinCategory c = parse_category(read_text_file(data_file("idempotent_monoid.json")));
    CHECK(validate(c).ok());
    const EIReport r = ei_report(c);
    CHECK_FALSE(r.ei);
    REQUIRE(r.non_invertible.size() == 1);
    CHECK(c.morphism(r.non_invertible[0]).name == "z");
}

TEST_CASE("parse and serialize round-trip")
{
    for (const auto& e : catalog()) {
        const std::string text = serialize(*e.category);
        const FinCategory back = parse_category(text);
        CHECK_MESSAGE(back == *e.category, e.name);
        CHECK(serialize(back) == text);
    }
}

TEST_CASE("the empty category parses and validates")
{
    const FinCategory c = parse_category(R"({"objects": [], "morphisms": [], "identities": {}, "compose": []})");
    CHECK(c.num_objects() == 0);
    CHECK(validate(c).ok());
    CHECK(is_ei(c));
    CHECK(iso_classes(c).classes.empty());
}

TEST_CASE("unknown identifiers are semantic parse errors")
{
    CHECK_THROWS_WITH_AS(parse_category(R"({
      "objects": ["x"], "morphisms": [{"id": "ix", "src": "x", "tgt": "x"}],
      "identities": {"x": "ix"}, "compose": [["ix", "q", "ix"]]})"),
                         doctest::Contains("unknown morphism \"q\""), ParseError);
    CHECK_THROWS_AS(parse_category(R"({
      "objects": ["x"], "morphisms": [{"id": "ix", "src": "x", "tgt": "w"}],
      "identities": {"x": "ix"}, "compose": []})"),
                    ParseError);
    CHECK_THROWS_AS(parse_category(R"({"objects": ["x"], "morphisms": [], "identities": {}})"), ParseError);
}

TEST_CASE("syntax errors carry a position")
{
    try {
        parse_category(read_text_file(data_file("bad_syntax.json")));
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() > 0);
        CHECK(e.column() > 0);
    }
}

TEST_CASE("opposite reverses arrows and is an involution")
{
    const FinCategory p = pushout_category();
    const FinCategory op = opposite(p);
    CHECK(validate(op).ok());
    CHECK(op.hom_count(0, 1) == 1);
    CHECK(op.hom_count(1, 0) == 0);
    CHECK(opposite(op) == p);
}

TEST_CASE("opposite of C3 is isomorphic to C3 through inversion")
{
    const CategoryPtr c3 = make_category(cyclic_group(3));
    const CategoryPtr op = make_category(opposite(*c3));
    Functor inv{c3, op, {0}, {}};
    for (MorphismId m = 0; m < c3->num_morphisms(); ++m)
        inv.on_morphisms.push_back(*inverse_of(*c3, m));
    CHECK(validate(inv).ok());
    Functor id{c3, op, {0}, {0, 1, 2}};
    // C3 is abelian, so the identity is a functor to the opposite as well.
    CHECK(validate(id).ok());
}

TEST_CASE("opposite of S3 is not isomorphic to S3 through the identity")
{
    const CategoryPtr s3 = make_category(symmetric_group(3));
    const CategoryPtr op = make_category(opposite(*s3));
    Functor id{s3, op, {0}, {}};
    for (MorphismId m = 0; m < s3->num_morphisms(); ++m)
        id.on_morphisms.push_back(m);
    CHECK_FALSE(validate(id).ok());
}

TEST_CASE("product of the pushout shape with C2")
{
    const FinCategory p = product(pushout_category(), cyclic_group(2));
    // C2 has a single object, so the objects are those of the pushout shape.
    CHECK(p.num_objects() == 3);
    CHECK(p.num_morphisms() == 10);
    CHECK(validate(p).ok());
    CHECK(is_ei(p));
}

TEST_CASE("EI detection")
{
    CHECK(is_ei(pushout_category()));
    CHECK(is_ei(symmetric_group(3)));
    CHECK(is_ei(*named("chain2xC2")));
    CHECK(ei_report(symmetric_group(3)).groups[0].order() == 6);
}

TEST_CASE("iso classes and cores")
{
    SUBCASE("discrete category on two objects")
    {
        const IsoClasses ic = iso_classes(*named("discrete2"));
        CHECK(ic.classes.size() == 2);
    }
    SUBCASE("two isomorphic objects collapse to one")
    {
        const FinCategory g = translation_groupoid(2, {1, 0});
        CHECK(validate(g).ok());
        const IsoClasses ic = iso_classes(g);
        REQUIRE(ic.classes.size() == 1);
        CHECK(ic.classes[0] == std::vector<ObjectId>{0, 1});
        CHECK_FALSE(is_skeletal(g));
        const Core k = core(g);
        CHECK(k.category.num_objects() == 1);
        CHECK(k.category.num_morphisms() == 1);
        CHECK(is_skeletal(k.category));
    }
    SUBCASE("arrow times C2 has two classes")
    {
        const FinCategory p = product(arrow_category(), cyclic_group(2));
        CHECK(iso_classes(p).classes.size() == 2);
        CHECK(is_skeletal(p));
    }
}

TEST_CASE("core maps every object to its representative by an isomorphism")
{
    for (const auto& e : catalog()) {
        const FinCategory& c = *e.category;
        const Core k = core(c);
        CHECK(validate(k.category).ok());
        CHECK(is_skeletal(k.category));
        for (ObjectId o = 0; o < c.num_objects(); ++o) {
            const MorphismId iso = k.to_core[o];
            CHECK(c.src(iso) == o);
            CHECK(c.tgt(iso) == k.representatives[k.core_of[o]]);
            CHECK(inverse_of(c, iso).has_value());
        }
    }
}

TEST_CASE("constructions preserve validity on the catalog")
{
    for (const auto& e : catalog()) {
        CHECK_MESSAGE(validate(*e.category).ok(), e.name);
        CHECK(validate(opposite(*e.category)).ok());
        CHECK(validate(product(*e.category, cyclic_group(2))).ok());
        CHECK(is_ei(product(*e.category, cyclic_group(2))));
    }
}

TEST_CASE("full subcategory keeps the homs between chosen objects")
{
    const FinCategory p = pushout_category();
    const FinCategory sub = full_subcategory(p, {0, 1});
    CHECK(sub.num_objects() == 2);
    CHECK(sub.num_morphisms() == 3);
    CHECK(validate(sub).ok());
}

TEST_CASE("EI is preserved by opposites and products")
{
    const FinCategory monoid = parse_category(read_text_file(data_file("idempotent_monoid.json")));
    std::vector<FinCategory> cats{monoid};
    for (const auto& e : catalog())
        cats.push_back(*e.category);
    for (const auto& c : cats) {
        CHECK(is_ei(opposite(c)) == is_ei(c));
        CHECK(is_ei(product(c, monoid)) == false);
        CHECK(is_ei(product(c, symmetric_group(3))) == is_ei(c));
    }
}
