#include "eitrace/coweight.hpp"
#include "eitrace/errors.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace eitrace;
using eitrace::testing::named;
using eitrace::testing::q;

TEST_CASE("zeta matrix of the pushout shape")
{
    const ZetaMatrix z = zeta_matrix(pushout_category());
    CHECK(z.matrix == Matrix::from_ints({{1, 0, 0}, {1, 1, 0}, {1, 0, 1}}));
}

TEST_CASE("zeta matrix of a group is its order")
{
    CHECK(zeta_matrix(symmetric_group(3)).matrix == Matrix::from_ints({{6}}));
}

TEST_CASE("coweighting of the pushout shape is (-1, 1, 1)")
{
    const std::vector<Rational> expected{-1, 1, 1};
    CHECK(coweighting_solve(pushout_category()).lambda == expected);
    CHECK(coweighting_mobius(pushout_category()).lambda == expected);
}

TEST_CASE("coweighting of the arrow puts all weight on the source")
{
    const std::vector<Rational> expected{1, 0};
    CHECK(coweighting_solve(arrow_category()).lambda == expected);
    CHECK(coweighting_mobius(arrow_category()).lambda == expected);
}

TEST_CASE("coweighting of a discrete category is all ones")
{
    CHECK(coweighting_solve(*named("discrete2")).lambda == std::vector<Rational>{1, 1});
}

TEST_CASE("coweighting of a group is 1/#G")
{
    for (std::size_t n : {1, 2, 5}) {
        CHECK(coweighting_solve(cyclic_group(n)).lambda == std::vector<Rational>{q(1, long(n))});
        CHECK(coweighting_mobius(cyclic_group(n)).lambda == std::vector<Rational>{q(1, long(n))});
    }
}

TEST_CASE("a non-skeletal category can have singular zeta")
{
    CHECK_THROWS_AS(coweighting_solve(translation_groupoid(2, {1, 0})), SingularZeta);
    CHECK_THROWS_AS(coweighting_mobius(translation_groupoid(2, {1, 0})), InvalidInput);
}

TEST_CASE("the coweighting satisfies lambda zeta = 1")
{
    for (const auto& e : catalog()) {
        const Core k = core(*e.category);
        const Coweighting w = coweighting_solve(k.category);
        const ZetaMatrix z = zeta_matrix(k.category);
        for (std::size_t j = 0; j < z.size(); ++j) {
            Rational s = 0;
            for (std::size_t i = 0; i < z.size(); ++i)
                s += w.lambda[i] * z.matrix(i, j);
            CHECK_MESSAGE(s == 1, e.name);
        }
        CHECK(coweighting_mobius(k.category).lambda == w.lambda);
    }
}

TEST_CASE("the Moebius sum of a chain poset")
{
    // 0 < 1 < 2: only the least element carries weight.
    CHECK(coweighting_mobius(*named("chain3")).lambda == std::vector<Rational>{1, 0, 0});
}

TEST_CASE("triangular order of a skeletal EI zeta matrix")
{
    for (const auto& e : catalog()) {
        const Core k = core(*e.category);
        const TriangularOrder t = triangular_order(zeta_matrix(k.category));
        const std::size_t n = t.zeta.rows();
        Rational diag = 1;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < r; ++c)
                CHECK(t.zeta(r, c) == 0);
            diag *= t.zeta(r, r);
        }
        CHECK_MESSAGE(t.determinant == diag, e.name);
        CHECK(t.diagonal_product == diag);
    }
}

TEST_CASE("a zeta matrix with a cycle has no triangular order")
{
    CHECK_THROWS_AS(triangular_order(ZetaMatrix{Matrix::from_ints({{1, 1}, {1, 1}})}), InvalidInput);
}

TEST_CASE("theorem coefficients of the pushout shape")
{
    const TheoremCoefficients t = theorem_coefficients(pushout_category());
    CHECK(t.lambda == std::vector<Rational>{-1, 1, 1});
    CHECK(t.lambda_solve == t.lambda_mobius);
    CHECK(t.characteristic == 1);
}

TEST_CASE("theorem coefficients of a group are class size over order")
{
    for (const char* name : {"C2", "C3", "C4", "C6", "S3"}) {
        const CategoryPtr ptr = named(name);
        const FinCategory& g = *ptr;
        const TheoremCoefficients t = theorem_coefficients(g);
        const auto n = long(g.num_morphisms());
        REQUIRE(t.lambda.size() == t.index.size());
        for (std::size_t k = 0; k < t.index.size(); ++k)
            CHECK_MESSAGE(t.lambda[k] == q(long(t.index.entries[k].class_size), n), name);
    }
}

TEST_CASE("theorem coefficients of S3 in index order")
{
    const TheoremCoefficients t = theorem_coefficients(symmetric_group(3));
    CHECK(t.lambda == std::vector<Rational>{q(1, 6), q(1, 2), q(1, 3)});
}

TEST_CASE("theorem coefficients of chain2 x C2")
{
    const TheoremCoefficients t = theorem_coefficients(*named("chain2xC2"));
    CHECK(t.lambda == std::vector<Rational>{q(1, 2), q(1, 2), 0, 0});
}

TEST_CASE("triangular determinant equals the product of centralizer orders")
{
    for (const auto& e : catalog()) {
        const TheoremCoefficients t = theorem_coefficients(*e.category);
        Rational centralizers = 1;
        for (const auto& entry : t.index.entries)
            centralizers *= long(entry.centralizer_order);
        CHECK_MESSAGE(t.triangular.determinant == centralizers, e.name);
        CHECK(determinant(t.zeta) == centralizers);
    }
}

TEST_CASE("theorem coefficients reject non-EI categories")
{
    std::vector<MorphismInfo> mor{{"e", 0, 0}, {"z", 0, 0}};
    const FinCategory monoid =
        FinCategory::build({"*"}, mor, {0}, [](MorphismId g, MorphismId f) { return MorphismId(g | f); });
    CHECK_THROWS_AS(theorem_coefficients(monoid), NotEI);
}
