#pragma once

#include "eitrace/fincat.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace eitrace {

/// Twisted arrow category with its projection to C^op x C.
///
/// Objects are the morphisms f : i -> j of C; a morphism f -> f' is a pair
/// (u : i' -> i, v : j -> j') with f' = v o f o u.
struct TwistedArrow {
    CategoryPtr category;
    std::vector<MorphismId> arrow;                          ///< per object: the morphism of C
    std::vector<std::pair<MorphismId, MorphismId>> squares; ///< per morphism: (u, v)
    Functor projection;                                     ///< to product(opposite(C), C)
};

TwistedArrow twisted_arrow(const CategoryPtr& c);

/// The category of opposed pairs (h1 : i -> i', h2 : i' -> i).
///
/// A morphism (h1, h2) -> (k1, k2), with k1 : j -> j', is a pair
/// (a : j -> i, b : i' -> j') such that k1 = b h1 a and h2 = a k2 b.
struct DCategory {
    CategoryPtr category;
    std::vector<std::pair<MorphismId, MorphismId>> pairs; ///< per object: (h1, h2)
    std::vector<std::pair<MorphismId, MorphismId>> legs;  ///< per morphism: (a, b)
    /// Object index of the pair (id_i, h) for an endomorphism h of i.
    std::size_t object_of_endo(const FinCategory& base, MorphismId h) const;
};

DCategory d_category(const FinCategory& c);

/// Connected components; component ids are numbered by least object.
struct Components {
    std::size_t count = 0;
    std::vector<std::size_t> component_of;
};

Components pi0(const FinCategory& c);

/// pi_0 of d_category(c) computed from the objects and morphism endpoints
/// alone, without materializing the composition table.
Components d_components(const FinCategory& c, std::vector<std::pair<MorphismId, MorphismId>>* pairs = nullptr);

/// Classes of endomorphisms under the relation generated by m1 m2 ~ m2 m1.
/// `class_of` is indexed by morphism; non-endomorphisms map to kNone.
struct CyclicClasses {
    std::size_t count = 0;
    std::vector<std::size_t> class_of;
};

CyclicClasses cyclic_endo_classes(const FinCategory& c);

/// Endomorphism category: objects are endomorphisms h of C, a morphism
/// h -> k is m with m h = k m.
struct EndoCategory {
    CategoryPtr category;
    std::vector<MorphismId> endo;                    ///< per object: the endomorphism of C
    std::vector<MorphismId> underlying;              ///< per morphism: m
    std::vector<std::size_t> object_of_endo;         ///< per morphism of C: object index, or kNone
};

EndoCategory endo_category(const FinCategory& c);

/// The functor d(C) -> E(C), (h1, h2) |-> h1 h2 and (a, b) |-> b.
Functor canonical_functor(const FinCategory& c, const DCategory& d, const EndoCategory& e);

struct EndoClassEntry {
    ObjectId object = 0;            ///< representative of the iso class of objects
    MorphismId representative = 0;  ///< least-index member of the conjugacy class in G_object
    std::vector<MorphismId> members;
    std::size_t class_size = 0;
    std::size_t centralizer_order = 0;
    std::size_t group_order = 0;
};

/// One entry per (iso class of objects, conjugacy class of its automorphism
/// group), in order of representative object then least class member.
struct EndoClassIndex {
    std::vector<EndoClassEntry> entries;
    std::size_t size() const noexcept { return entries.size(); }
    /// Entry whose class contains an endomorphism isomorphic in E(C) to h.
    std::size_t locate(const FinCategory& c, MorphismId h) const;
};

/// Throws NotEI if some endomorphism monoid is not a group. The bijection
/// with pi_0(d(C)) is checked and a failure raises InternalMismatch.
EndoClassIndex endo_class_index(const FinCategory& c);

/// Square-free radical of the product of the automorphism group orders.
std::size_t characteristic(const FinCategory& c);

/// Conjugacy classes of a group table, as element positions; classes are
/// ordered by least member.
std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g);

} // namespace eitrace
