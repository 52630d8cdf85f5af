#pragma once

#include "eitrace/constructions.hpp"
#include "eitrace/fincat.hpp"
#include "eitrace/matrix.hpp"

#include <cstddef>
#include <vector>

namespace eitrace {

/// zeta(i, j) = #Hom(i, j) in object index order.
struct ZetaMatrix {
    Matrix matrix;
    std::size_t size() const noexcept { return matrix.rows(); }
};

ZetaMatrix zeta_matrix(const FinCategory& c);

/// One coefficient per object of the category it was computed on.
struct Coweighting {
    std::vector<Rational> lambda;
};

/// The unique lambda with lambda * zeta = (1, ..., 1). Throws SingularZeta.
Coweighting coweighting_solve(const FinCategory& c);

/// Alternating sum over chains of pairwise distinct objects
/// a_0 -> ... -> a_n = j of prod zeta(a_l, a_{l+1}) / prod #Aut(a_l).
/// Throws NotEI on a non-EI category and InvalidInput on a non-skeletal one.
Coweighting coweighting_mobius(const FinCategory& c);

/// An order under which zeta is upper triangular. Exists for the zeta
/// matrix of a skeletal EI category, whose diagonal then holds the
/// automorphism group orders. Throws InvalidInput if there is none.
struct TriangularOrder {
    std::vector<std::size_t> order;
    Matrix zeta;          ///< zeta permuted into `order`
    Rational determinant; ///< det(zeta)
    Rational diagonal_product;
};

TriangularOrder triangular_order(const ZetaMatrix& zeta);

/// Coefficients of the trace formula, aligned to endo_class_index(I).
struct TheoremCoefficients {
    EndoClassIndex index;
    std::vector<Rational> lambda;        ///< agreed value of both methods
    std::vector<Rational> lambda_solve;
    std::vector<Rational> lambda_mobius;
    Matrix zeta;                         ///< zeta of E(I) between the index representatives
    TriangularOrder triangular;          ///< of the core of E(I), in index positions
    std::size_t characteristic = 1;
};

/// Builds E(I), takes its core, computes the coweighting both ways and
/// requires exact agreement (InternalMismatch otherwise). Throws NotEI.
TheoremCoefficients theorem_coefficients(const FinCategory& i);

} // namespace eitrace
