#pragma once

#include "eitrace/constructions.hpp"
#include "eitrace/fincat.hpp"
#include "eitrace/matrix.hpp"

#include <cstddef>
#include <string_view>
#include <vector>

namespace eitrace {

/// Presheaf of finite-dimensional rational vector spaces on a finite category.
///
/// A morphism h : i -> j acts contravariantly, A(h) : A_j -> A_i, stored as a
/// dims[i] x dims[j] matrix, with A(g o f) = A(f) A(g).
class Representation {
public:
    Representation() = default;
    Representation(CategoryPtr base, std::vector<std::size_t> dims, std::vector<Matrix> action);

    /// Every object gets `dim` and every morphism acts by the identity.
    static Representation constant(CategoryPtr base, std::size_t dim = 1);

    const CategoryPtr& base() const noexcept { return base_; }
    const FinCategory& category() const { return *base_; }
    std::size_t dim(ObjectId i) const { return dims_.at(i); }
    const std::vector<std::size_t>& dims() const noexcept { return dims_; }
    std::size_t total_dim() const;
    const Matrix& action(MorphismId h) const { return action_.at(h); }
    const std::vector<Matrix>& actions() const noexcept { return action_; }

private:
    CategoryPtr base_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> action_;
};

/// Natural family f_i : A_i (x) S -> A_i (x) T for constant S, T.
class TwistedEndo {
public:
    TwistedEndo() = default;
    TwistedEndo(Representation rep, std::size_t dimS, std::size_t dimT, std::vector<Matrix> components);

    /// f_i = scalar * identity, untwisted.
    static TwistedEndo scalar(Representation rep, const Rational& scalar, std::size_t dimS = 1);

    const Representation& rep() const noexcept { return rep_; }
    const FinCategory& category() const { return rep_.category(); }
    std::size_t dim_s() const noexcept { return dimS_; }
    std::size_t dim_t() const noexcept { return dimT_; }
    const Matrix& component(ObjectId i) const { return components_.at(i); }
    const std::vector<Matrix>& components() const noexcept { return components_; }

private:
    Representation rep_;
    std::size_t dimS_ = 1;
    std::size_t dimT_ = 1;
    std::vector<Matrix> components_;
};

/// Reports shape, identity and functoriality violations with the witnessing morphisms.
ValidationReport validate_rep(const Representation& a);
/// validate_rep plus shape and naturality of every component.
ValidationReport validate_endo(const TwistedEndo& f);

/// partial_trace((A(h) (x) id_T) f_i) for an automorphism h of i.
Matrix local_trace(const TwistedEndo& f, ObjectId i, MorphismId h);

struct LocalTraceTable {
    EndoClassIndex index;
    std::vector<Matrix> values; ///< one dT x dS matrix per index entry
};

/// Throws NotEI on a non-EI base.
LocalTraceTable local_trace_table(const TwistedEndo& f);
LocalTraceTable local_trace_table(const TwistedEndo& f, const EndoClassIndex& index);

/// [A, B] over product(opposite(I), I): the fiber at (i, j) is Hom(A_i, B_j)
/// with matrices vectorized row-major.
Representation external_hom(const Representation& a, const Representation& b);

/// Fiberwise dual over opposite(I); actions are transposes.
Representation dual_rep(const Representation& a);

/// The witness endomorphism for the automorphism k of j: A_i has basis
/// I(i, j) (in morphism index order), g : i -> i' acts by m |-> m o g, and
/// f_i sends the m-summand of A_i (x) S identically to the (k^-1 o m)-summand.
TwistedEndo witness(const CategoryPtr& base, ObjectId j, MorphismId k, std::size_t dimS);

// File formats. A representation file is
//   {"category": <path or inline category>, "dims": {obj: n}, "action": {morId: matrix}}
// and an endo file is {"dimS": n, "dimT": n, "components": {obj: matrix}}.
// Identity actions may be omitted.

Representation parse_representation(std::string_view text, const CategoryPtr& base);
/// Reads the category from the "category" field (inline object or a path
/// resolved against `base_dir`).
Representation parse_representation(std::string_view text, std::string_view base_dir = ".");
TwistedEndo parse_endo(std::string_view text, const Representation& rep);
std::string serialize(const Representation& a, bool inline_category = true);
std::string serialize(const TwistedEndo& f);

} // namespace eitrace
