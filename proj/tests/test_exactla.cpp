#include "eitrace/chain.hpp"
#include "eitrace/errors.hpp"
#include "eitrace/matrix.hpp"
#include "eitrace/rational.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace eitrace;
using eitrace::testing::q;
using eitrace::testing::random_matrix;

TEST_CASE("rationals parse and print canonically")
{
    CHECK(parse_rational("6/4") == q(3, 2));
    CHECK(parse_rational("-2/6") == q(-1, 3));
    CHECK(format_rational(q(4, 2)) == "2/1");
    CHECK(format_rational(q(-1, 3)) == "-1/3");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
}

TEST_CASE("kernel of [[1,1],[1,1]] is spanned by (1,-1)")
{
    const Matrix k = kernel(Matrix::from_ints({{1, 1}, {1, 1}}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == -k(1, 0));
    CHECK(k(0, 0) != 0);
    CHECK(rank(Matrix::from_ints({{1, 1}, {1, 1}})) == 1);
}

TEST_CASE("rank-nullity and solve on random integer matrices")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 4, c = 1 + (trial / 4) % 5;
        const Matrix a = random_matrix(rng, r, c, 2);
        const Matrix k = kernel(a);
        CHECK(rank(a) + k.cols() == c);
        CHECK((a * k).is_zero());
        const Matrix x = random_matrix(rng, c, 2);
        const auto sol = solve(a, a * x);
        REQUIRE(sol);
        CHECK(a * *sol == a * x);
    }
}

TEST_CASE("solve reports inconsistent systems")
{
    CHECK_FALSE(solve(Matrix::from_ints({{1, 1}, {1, 1}}), Matrix::from_ints({{1}, {2}})));
    const auto half = solve(Matrix::from_ints({{2}}), Matrix::from_ints({{1}}));
    REQUIRE(half);
    CHECK((*half)(0, 0) == q(1, 2));
}

TEST_CASE("inverse, determinant and left inverse")
{
    const Matrix a = Matrix::from_ints({{2, 1}, {1, 1}});
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2));
    CHECK(determinant(a) == 1);
    CHECK_FALSE(inverse(Matrix::from_ints({{1, 2}, {2, 4}})));
    CHECK(determinant(Matrix::from_ints({{1, 2}, {2, 4}})) == 0);
    const Matrix basis = Matrix::from_ints({{1, 0}, {1, 1}, {0, 3}});
    CHECK(left_inverse(basis) * basis == Matrix::identity(2));
}

TEST_CASE("shape mismatches throw")
{
    CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), ShapeError);
    CHECK_THROWS_AS(Matrix(2, 2) += Matrix(2, 3), ShapeError);
    CHECK_THROWS_AS(partial_trace(Matrix(3, 3), 2, 1, 1), ShapeError);
}

TEST_CASE("partial trace of a Kronecker product")
{
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t dA = 1 + trial % 3, dS = 1 + trial % 2, dT = 1 + (trial / 2) % 3;
        const Matrix a = random_matrix(rng, dA, dA);
        const Matrix b = random_matrix(rng, dT, dS);
        CHECK(partial_trace(kron(a, b), dA, dS, dT) == trace(a) * b);
    }
}

TEST_CASE("partial trace with trivial S and T is the trace")
{
    const Matrix m = Matrix::from_ints({{1, 2, 0}, {4, 5, 6}, {7, 8, -9}});
    CHECK(partial_trace(m, 3, 1, 1) == Matrix::from_ints({{-3}}));
}

TEST_CASE("partial trace of the swap on Q^2 (x) Q^2 is the identity")
{
    Matrix swap(4, 4);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t s = 0; s < 2; ++s)
            swap(s * 2 + a, a * 2 + s) = 1;
    CHECK(partial_trace(swap, 2, 2, 2) == Matrix::identity(2));
}

TEST_CASE("partial trace is cyclic in the traced factor")
{
    std::mt19937_64 rng(8);
    const Matrix p = random_matrix(rng, 3, 3);
    const auto inv = inverse(p + Matrix::identity(3) * 10);
    REQUIRE(inv);
    const Matrix g = p + Matrix::identity(3) * 10;
    const Matrix m = random_matrix(rng, 6, 3);
    const Matrix conj = kron(g, Matrix::identity(2)) * m * kron(*inv, Matrix::identity(1));
    CHECK(partial_trace(conj, 3, 1, 2) == partial_trace(m, 3, 1, 2));
}

TEST_CASE("a complex with d o d != 0 is rejected")
{
    const Matrix d1 = Matrix::from_ints({{1}});
    const Matrix d2 = Matrix::from_ints({{1}});
    CHECK_THROWS_AS(ChainComplex(0, {1, 1, 1}, {d1, d2}), InvalidInput);
    CHECK_THROWS_AS(ChainComplex(0, {1, 2}, {Matrix(1, 1)}), ShapeError);
}

TEST_CASE("homology of 0 -> Q -> Q -> 0 by the identity vanishes")
{
    const ChainComplex c(0, {1, 1}, {Matrix::identity(1)});
    CHECK(homology_dims(c) == std::vector<std::size_t>{0, 0});
    CHECK(c.euler_characteristic() == 0);
    const ChainEndo u(c, 1, 1, {Matrix::from_ints({{5}}), Matrix::from_ints({{5}})});
    CHECK(lefschetz_trace(u) == Matrix(1, 1));
}

TEST_CASE("Lefschetz trace of the identity is the Euler characteristic")
{
    const Matrix d = Matrix::from_ints({{1, -1, 0}, {0, 1, -1}}).transpose();
    const ChainComplex c(0, {3, 2}, {d});
    CHECK(homology_dims(c) == std::vector<std::size_t>{1, 0});
    const ChainEndo id = ChainEndo::identity(c);
    CHECK(lefschetz_trace(id) == Matrix::from_ints({{1}}));
    CHECK(homology_lefschetz_trace(id) == Matrix::from_ints({{1}}));
}

TEST_CASE("a single degree 0 endomorphism has its own trace")
{
    const ChainComplex c(0, {1}, {});
    const ChainEndo u(c, 1, 1, {Matrix::from_ints({{3}})});
    CHECK(lefschetz_trace(u) == Matrix::from_ints({{3}}));
}

TEST_CASE("a map that does not commute with d is rejected")
{
    const ChainComplex c(0, {1, 1}, {Matrix::identity(1)});
    CHECK_THROWS_AS(ChainEndo(c, 1, 1, {Matrix::from_ints({{1}}), Matrix::from_ints({{2}})}), InvalidInput);
}

TEST_CASE("chain and homology Lefschetz traces agree on random twisted endomorphisms")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 25; ++trial) {
        // C_1 = Q^3 -> C_0 = Q^2 of rank <= 2; u = conjugates of a chain map built on a splitting.
        const Matrix d = random_matrix(rng, 2, 3, 1);
        const ChainComplex c(0, {2, 3}, {d});
        const std::size_t dS = 1 + trial % 2, dT = 1 + (trial / 2) % 2;
        // Chain maps of the form (kron(phi0, M), kron(phi1, M)) with d phi1 = phi0 d; take phi = scalars.
        const Matrix twist = random_matrix(rng, dT, dS);
        const Rational s = trial - 12;
        const ChainEndo u(c, dS, dT, {kron(Matrix::identity(2) * s, twist), kron(Matrix::identity(3) * s, twist)});
        CHECK(lefschetz_trace(u) == homology_lefschetz_trace(u));
        CHECK(lefschetz_trace(u) == twist * (s * c.euler_characteristic()));
    }
}

TEST_CASE("induced map on a subquotient")
{
    // u = diag(2, 3, 5) on Q^3, Z = <e0, e1>, B = <e0>: induced map is (3).
    const Matrix u = Matrix::from_ints({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
    const Matrix z = Matrix::from_ints({{1, 0}, {0, 1}, {0, 0}});
    const Matrix b = Matrix::from_ints({{1}, {0}, {0}});
    CHECK(induced_on_subquotient(u, z, b, 1, 1) == Matrix::from_ints({{3}}));
}
