#pragma once

#include "eitrace/chain.hpp"
#include "eitrace/fincat.hpp"
#include "eitrace/matrix.hpp"
#include "eitrace/rep.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace eitrace {

/// Basis = morphisms; basis[g] * basis[f] = g o f when composable, else 0.
struct CategoryAlgebra {
    CategoryPtr base;
    std::vector<std::uint32_t> product; ///< product[g * n + f], kNone for zero
    std::size_t dimension() const noexcept { return base ? base->num_morphisms() : 0; }
    /// Brute-force associativity and unit check.
    bool verify() const;
};

CategoryAlgebra category_algebra(const CategoryPtr& c);

/// A covariant functor on `base`, i.e. a module over the category algebra
/// graded by objects: morphism m : x -> y acts by a dims[y] x dims[x] matrix.
struct AlgModule {
    CategoryPtr base;
    std::vector<std::size_t> dims;
    std::vector<Matrix> action;
    std::size_t total_dim() const;
    /// Action of the basis morphism on the direct sum of all components.
    Matrix total_action(MorphismId m) const;
};

ValidationReport validate_module(const AlgModule& m);
AlgModule constant_module(const CategoryPtr& c);

/// A presheaf on I as a covariant diagram on opposite(I), which keeps the
/// object and morphism indices of I.
AlgModule rep_to_module(const Representation& a);
Representation module_to_rep(const AlgModule& m, const CategoryPtr& base);

/// Free module on generators at objects of `base`: the sum of the
/// representables Q base(g, -). Its component at x has basis
/// (generator, morphism g -> x), generator-major, morphisms in hom order.
class FreeModule {
public:
    FreeModule() = default;
    FreeModule(CategoryPtr base, std::vector<ObjectId> generators);

    const CategoryPtr& base() const noexcept { return base_; }
    const std::vector<ObjectId>& generators() const noexcept { return generators_; }
    std::size_t rank() const noexcept { return generators_.size(); }
    std::size_t dim(ObjectId x) const { return dims_[x]; }
    std::size_t index(std::size_t generator, MorphismId m) const;
    /// The action of m : x -> y, a dim(y) x dim(x) matrix.
    Matrix action(MorphismId m) const;
    AlgModule as_module() const;

    /// Component at x of the module map sending generator a to images[a],
    /// a vector in the target's component at the generator's object.
    Matrix map_component(const FreeModule& target, const std::vector<Matrix>& images, ObjectId x) const;

private:
    CategoryPtr base_;
    std::vector<ObjectId> generators_;
    std::vector<std::size_t> dims_;
    std::vector<std::vector<std::size_t>> offset_; ///< offset_[x][generator]
    std::vector<std::size_t> hom_position_;        ///< position of m in hom(src, tgt)
};

struct ResolutionOptions {
    /// Maximum length; 0 means #Mor + 2.
    std::size_t cap = 0;
    /// Reshuffles the order in which candidate generators are tried.
    std::uint64_t seed = 0;
};

/// Projective resolution of the constant right module over the category
/// algebra of C, modelled as covariant functors on D = opposite(C).
///
/// P_n is free on generators[n]; P_length is the image of an idempotent
/// module endomorphism of its free module (the identity when free).
struct Resolution {
    CategoryPtr category; ///< C
    CategoryPtr dual;     ///< D = opposite(C)
    std::vector<FreeModule> free;
    /// boundary[n][a] for n >= 1: image of generator a of P_n in P_{n-1}.
    std::vector<std::vector<Matrix>> boundary;
    /// Image of each generator of the top free module under the idempotent.
    std::vector<Matrix> top_idempotent;
    bool top_is_free = true;

    std::size_t length() const noexcept { return free.empty() ? 0 : free.size() - 1; }
    /// Component at x of d_n : P_n -> P_{n-1} (n >= 1) or of the augmentation (n == 0).
    Matrix boundary_component(std::size_t n, ObjectId x) const;
    Matrix idempotent_component(ObjectId x) const;
};

/// Throws ResolutionCapExceeded naming Char(C) when the cap is reached.
Resolution projective_resolution(const CategoryPtr& c, const ResolutionOptions& options = {});

struct ExactnessAudit {
    bool exact = true;
    std::vector<std::string> failures;
};

/// Rank check of every stage at every object, including d o d = 0, the
/// augmentation and injectivity on the top projective.
ExactnessAudit audit_exactness(const Resolution& r);

/// P_* (x)_C F with the endomorphism id (x) f. F is a covariant diagram on
/// C = r.category and f_c : F_c (x) S -> F_c (x) T is natural.
ChainEndo derived_colimit_complex(const Resolution& r, const AlgModule& f_module, std::size_t dimS, std::size_t dimT,
                                  const std::vector<Matrix>& f);

/// Resolution-based Lefschetz trace of the hocolim over opposite(I).
ChainEndo resolution_complex(const TwistedEndo& f, const Resolution& r);
Matrix hocolim_trace_resolution(const TwistedEndo& f, const ResolutionOptions& options = {});
Matrix hocolim_trace_resolution(const TwistedEndo& f, const Resolution& r);

/// True when I is skeletal without non-identity endomorphisms.
bool is_loop_free(const FinCategory& c);

/// Normalized bar complex over opposite(I). Throws NotLoopFree.
ChainEndo bar_complex(const TwistedEndo& f);
Matrix hocolim_trace_bar(const TwistedEndo& f);

/// (1/#G) sum_g partial_trace((A(g) (x) id_T) f). Throws NotAGroup unless
/// the base has one object and every morphism is invertible.
Matrix hocolim_trace_group(const TwistedEndo& f);

struct DirectColimit {
    std::size_t dim = 0;
    Matrix induced; ///< on colim (x) S -> colim (x) T
    Matrix trace;   ///< partial trace of `induced`
};

/// Colimit over C of a covariant diagram: the quotient of the direct sum of
/// the components by F(m) x - x, with the map induced by f.
DirectColimit direct_colimit(const AlgModule& f_module, std::size_t dimS, std::size_t dimT,
                             const std::vector<Matrix>& f);
/// The colimit over opposite(I) of a presheaf on I.
DirectColimit direct_colimit(const TwistedEndo& f);

} // namespace eitrace
