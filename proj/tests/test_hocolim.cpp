#include "eitrace/errors.hpp"
#include "eitrace/hocolim.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace eitrace;
using eitrace::testing::named;
using eitrace::testing::random_matrix;

namespace {

FinCategory left_zero_monoid()
{
    std::vector<MorphismInfo> mor;
    for (const char* n : {"e", "m1", "m2", "m3"})
        mor.push_back({n, 0, 0});
    const int table[4][4] = {{0, 1, 2, 3}, {1, 1, 1, 1}, {2, 2, 2, 2}, {3, 1, 1, 1}};
    return FinCategory::build({"*"}, mor, {0}, [&](MorphismId g, MorphismId f) { return MorphismId(table[g][f]); });
}

Matrix one(long v)
{
    return Matrix::from_ints({{v}});
}

TwistedEndo c2_regular_identity()
{
    const Representation a(make_category(cyclic_group(2)), {2},
                           {Matrix::identity(2), Matrix::from_ints({{0, 1}, {1, 0}})});
    return TwistedEndo::scalar(a, 1);
}

} // namespace

TEST_CASE("category algebra dimensions")
{
    const CategoryAlgebra arrow = category_algebra(make_category(arrow_category()));
    CHECK(arrow.dimension() == 3);
    CHECK(arrow.verify());
    const CategoryAlgebra s3 = category_algebra(make_category(symmetric_group(3)));
    CHECK(s3.dimension() == 6);
    CHECK(s3.verify());
}

TEST_CASE("category algebras of the catalog are associative and unital")
{
    for (const auto& e : catalog())
        CHECK_MESSAGE(category_algebra(e.category).verify(), e.name);
}

TEST_CASE("constant module and presheaf conversion")
{
    for (const auto& e : catalog()) {
        CHECK(validate_module(constant_module(e.category)).ok());
        const Representation a = generate_diagram(e.category, 5, 3).rep();
        const AlgModule m = rep_to_module(a);
        CHECK_MESSAGE(validate_module(m).ok(), e.name);
        const Representation back = module_to_rep(m, e.category);
        CHECK(back.actions() == a.actions());
    }
}

TEST_CASE("free modules are valid modules")
{
    const CategoryPtr p = make_category(pushout_category());
    const FreeModule f(p, {0, 1, 1});
    CHECK(validate_module(f.as_module()).ok());
    CHECK(f.dim(0) == 3);
    CHECK(f.dim(1) == 2);
}

TEST_CASE("resolution lengths")
{
    SUBCASE("a group splits immediately")
    {
        const Resolution r = projective_resolution(make_category(cyclic_group(2)));
        CHECK(r.length() == 0);
        CHECK_FALSE(r.top_is_free);
        CHECK(audit_exactness(r).exact);
    }
    SUBCASE("the arrow")
    {
        const Resolution r = projective_resolution(make_category(arrow_category()));
        CHECK(r.length() <= 1);
        CHECK(audit_exactness(r).exact);
    }
    SUBCASE("the opposite of the pushout shape needs length one")
    {
        const Resolution r = projective_resolution(make_category(opposite(pushout_category())));
        CHECK(r.length() == 1);
        CHECK(audit_exactness(r).exact);
    }
}

TEST_CASE("resolutions of the catalog are exact for every seed")
{
    for (const auto& e : catalog())
        for (std::uint64_t seed : {0u, 1u, 99u}) {
            const Resolution r = projective_resolution(make_category(opposite(*e.category)), {0, seed});
            const ExactnessAudit audit = audit_exactness(r);
            CHECK_MESSAGE(audit.exact, e.name, " seed ", seed);
        }
}

TEST_CASE("a non-EI monoid exceeds the resolution cap")
{
    // Resolutions are taken over the opposite, where the left zeros become right zeros.
    const CategoryPtr m = make_category(opposite(left_zero_monoid()));
    CHECK_THROWS_WITH_AS(projective_resolution(m), doctest::Contains("Char(C)"), ResolutionCapExceeded);
    CHECK_THROWS_AS(projective_resolution(m, {3, 0}), ResolutionCapExceeded);
}

TEST_CASE("hocolim over the terminal category is the trace")
{
    const Representation a(make_category(terminal_category()), {2}, {Matrix::identity(2)});
    const TwistedEndo f(a, 1, 1, {Matrix::from_ints({{2, 7}, {0, 5}})});
    CHECK(hocolim_trace_resolution(f) == one(7));
    CHECK(hocolim_trace_bar(f) == one(7));
    CHECK(hocolim_trace_group(f) == one(7));
}

TEST_CASE("hocolim of the regular presheaf of C2 has trace one")
{
    const TwistedEndo f = c2_regular_identity();
    CHECK(hocolim_trace_resolution(f) == one(1));
    CHECK(hocolim_trace_group(f) == one(1));
    CHECK_THROWS_AS(hocolim_trace_bar(f), NotLoopFree);
}

TEST_CASE("hocolim of the constant presheaf on the pushout shape")
{
    const TwistedEndo f = TwistedEndo::scalar(Representation::constant(make_category(pushout_category())), 1);
    CHECK(hocolim_trace_resolution(f) == one(1));
    const ChainEndo bar = bar_complex(f);
    CHECK(bar.complex().dims() == std::vector<std::size_t>{3, 2});
    CHECK(homology_dims(bar.complex()) == std::vector<std::size_t>{1, 0});
    CHECK(lefschetz_trace(bar) == one(1));
    CHECK_THROWS_AS(hocolim_trace_group(f), NotAGroup);
}

TEST_CASE("hocolim over a discrete category is the sum of traces")
{
    const CategoryPtr d = named("discrete2");
    const Representation a(d, {2, 1}, {Matrix::identity(2), Matrix::identity(1)});
    const TwistedEndo f(a, 1, 1, {Matrix::from_ints({{1, 2}, {3, 4}}), one(-6)});
    CHECK(hocolim_trace_bar(f) == one(-1));
    CHECK(hocolim_trace_resolution(f) == one(-1));
}

TEST_CASE("the group oracle on a trivial group is the trace")
{
    const Representation a(make_category(cyclic_group(1)), {3}, {Matrix::identity(3)});
    const TwistedEndo f(a, 1, 2, {Matrix::from_ints({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}, {1, 1, 1}, {0, 0, 0}, {4, 0, 0}})});
    CHECK(hocolim_trace_group(f) == partial_trace(f.component(0), 3, 1, 2));
}

TEST_CASE("direct colimits")
{
    SUBCASE("constant presheaf on a connected category")
    {
        for (const char* name : {"pushout", "diamond", "C3", "S3", "chain2xC2"}) {
            const DirectColimit c =
                direct_colimit(TwistedEndo::scalar(Representation::constant(named(name)), 3));
            CHECK_MESSAGE(c.dim == 1, name);
            CHECK(c.trace == one(3));
        }
    }
    SUBCASE("regular presheaf of C2")
    {
        const DirectColimit c = direct_colimit(c2_regular_identity());
        CHECK(c.dim == 1);
        CHECK(c.trace == one(1));
    }
    SUBCASE("discrete category")
    {
        const DirectColimit c = direct_colimit(TwistedEndo::scalar(Representation::constant(named("discrete2"), 2), 1));
        CHECK(c.dim == 4);
    }
}

TEST_CASE("oracles agree on random diagrams over the catalog")
{
    for (const auto& e : catalog()) {
        const CategoryPtr op = make_category(opposite(*e.category));
        const Resolution r = projective_resolution(op);
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            const TwistedEndo f = generate_diagram(e.category, seed * 31 + 7, 3);
            const ChainEndo u = resolution_complex(f, r);
            const Matrix t = lefschetz_trace(u);
            CHECK_MESSAGE(t == homology_lefschetz_trace(u), e.name);
            if (is_loop_free(*e.category))
                CHECK_MESSAGE(hocolim_trace_bar(f) == t, e.name);
            if (e.category->num_objects() == 1)
                CHECK_MESSAGE(hocolim_trace_group(f) == t, e.name);
            const DirectColimit colim = direct_colimit(f);
            CHECK(homology_dims(u.complex()).front() == colim.dim);
            CHECK(induced_on_homology(u).front().rows() == colim.induced.rows());
        }
    }
}

TEST_CASE("the resolution trace does not depend on the generator order")
{
    for (const auto& e : catalog()) {
        const TwistedEndo f = generate_diagram(e.category, 123, 3);
        const Matrix t0 = hocolim_trace_resolution(f, ResolutionOptions{0, 1});
        const Matrix t1 = hocolim_trace_resolution(f, ResolutionOptions{0, 2});
        CHECK_MESSAGE(t0 == t1, e.name);
    }
}

TEST_CASE("derived colimit complex of a free twist")
{
    // Over C2 with F regular and f = id (x) M the trace is M.
    std::mt19937_64 rng(2);
    const Matrix m = random_matrix(rng, 2, 3);
    const Representation a(make_category(cyclic_group(2)), {2},
                           {Matrix::identity(2), Matrix::from_ints({{0, 1}, {1, 0}})});
    const TwistedEndo f(a, 3, 2, {kron(Matrix::identity(2), m)});
    CHECK(hocolim_trace_resolution(f) == m);
    CHECK(hocolim_trace_group(f) == m);
}
