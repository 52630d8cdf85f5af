#pragma once

#include "eitrace/matrix.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace eitrace {

using ObjectId = std::size_t;
using MorphismId = std::size_t;

struct MorphismInfo {
    std::string name;
    ObjectId src = 0;
    ObjectId tgt = 0;
};

/// Finite category with a dense composition table.
///
/// Identifiers are opaque strings at the file layer and dense indices
/// internally; all orderings (cores, class representatives) are by index.
/// Construction only checks referential integrity; the category axioms are
/// checked by `validate`, which callers run before relying on them.
class FinCategory {
public:
    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    FinCategory() = default;

    /// `composites` lists (g, f, g o f) for composable pairs; pairs involving
    /// an identity may be omitted and are filled in as unit laws.
    FinCategory(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                std::vector<MorphismId> identities,
                const std::vector<std::array<MorphismId, 3>>& composites);

    /// Fills the table by calling `compose(g, f)` on every composable pair.
    static FinCategory build(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                             std::vector<MorphismId> identities,
                             const std::function<MorphismId(MorphismId, MorphismId)>& compose);

    std::size_t num_objects() const noexcept { return objects_.size(); }
    std::size_t num_morphisms() const noexcept { return morphisms_.size(); }

    const std::string& object_name(ObjectId o) const { return objects_.at(o); }
    const std::vector<std::string>& object_names() const noexcept { return objects_; }
    const MorphismInfo& morphism(MorphismId m) const { return morphisms_.at(m); }
    const std::vector<MorphismInfo>& morphisms() const noexcept { return morphisms_; }
    ObjectId src(MorphismId m) const { return morphisms_[m].src; }
    ObjectId tgt(MorphismId m) const { return morphisms_[m].tgt; }
    MorphismId identity(ObjectId o) const { return identities_.at(o); }
    const std::vector<MorphismId>& identities() const noexcept { return identities_; }
    bool is_identity(MorphismId m) const { return identities_[src(m)] == m; }

    std::optional<ObjectId> find_object(std::string_view name) const;
    std::optional<MorphismId> find_morphism(std::string_view name) const;

    bool composable(MorphismId g, MorphismId f) const { return tgt(f) == src(g); }
    /// g o f if the table defines it.
    std::optional<MorphismId> try_compose(MorphismId g, MorphismId f) const;
    /// g o f; throws InvalidInput if undefined.
    MorphismId compose(MorphismId g, MorphismId f) const;

    /// Morphisms i -> j in index order.
    const std::vector<MorphismId>& hom(ObjectId i, ObjectId j) const { return homs_[i * objects_.size() + j]; }
    std::size_t hom_count(ObjectId i, ObjectId j) const { return hom(i, j).size(); }

    friend bool operator==(const FinCategory& a, const FinCategory& b);

private:
    void index_names();

    std::vector<std::string> objects_;
    std::vector<MorphismInfo> morphisms_;
    std::vector<MorphismId> identities_;
    std::vector<std::uint32_t> table_; // table_[g * N + f]
    std::vector<std::vector<MorphismId>> homs_;
    std::unordered_map<std::string, ObjectId> object_index_;
    std::unordered_map<std::string, MorphismId> morphism_index_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

template <class... Args>
CategoryPtr make_category(Args&&... args)
{
    return std::make_shared<const FinCategory>(std::forward<Args>(args)...);
}

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const noexcept { return violations.empty(); }
};

/// Lists every violated unit law, source/target mismatch, missing composite
/// and associativity failure. Never throws.
ValidationReport validate(const FinCategory& c);

/// Throws InvalidInput carrying the first violations when `c` is not a category.
void require_valid(const FinCategory& c, std::string_view what = "category");

struct Functor {
    CategoryPtr domain;
    CategoryPtr codomain;
    std::vector<ObjectId> on_objects;
    std::vector<MorphismId> on_morphisms;
};

ValidationReport validate(const Functor& f);

FinCategory opposite(const FinCategory& c);
FinCategory product(const FinCategory& c, const FinCategory& d);
FinCategory full_subcategory(const FinCategory& c, const std::vector<ObjectId>& objects);
/// The category with one object and one morphism.
FinCategory terminal_category();

/// Multiplication table of the automorphism group of one object.
struct GroupTable {
    ObjectId object = 0;
    std::vector<MorphismId> elements;            ///< the morphisms of I(i,i), index order
    std::vector<std::vector<std::size_t>> table; ///< table[a][b] = position of elements[a] o elements[b]
    std::vector<std::size_t> inverse;            ///< position of the inverse of each element
    std::size_t order() const noexcept { return elements.size(); }
    std::size_t position(MorphismId m) const;
};

struct EIReport {
    bool ei = true;
    std::vector<GroupTable> groups; ///< one per object; only meaningful when ei
    std::vector<MorphismId> non_invertible; ///< endomorphisms without a two-sided inverse
};

EIReport ei_report(const FinCategory& c);
bool is_ei(const FinCategory& c);

/// Inverse of m if m is an isomorphism.
std::optional<MorphismId> inverse_of(const FinCategory& c, MorphismId m);

struct IsoClasses {
    std::vector<std::vector<ObjectId>> classes; ///< each sorted, classes ordered by least member
    std::vector<std::size_t> class_of;          ///< per object
};

IsoClasses iso_classes(const FinCategory& c);

/// Skeletal full subcategory on the least-index object of every iso class.
struct Core {
    FinCategory category;
    std::vector<ObjectId> representatives; ///< core object k is `representatives[k]` of the input
    std::vector<std::size_t> core_of;      ///< per input object: its core object
    std::vector<MorphismId> to_core;       ///< per input object: an isomorphism object -> representative
    std::vector<MorphismId> morphism_map;  ///< core morphism -> input morphism
};

Core core(const FinCategory& c);

bool is_skeletal(const FinCategory& c);

// File format: {"objects": [...], "morphisms": [{"id","src","tgt"}...],
//               "identities": {obj: id}, "compose": [["g","f","gf"], ...]}

/// Parses the category file format. Syntax errors carry line and column;
/// unknown identifiers and non-composable table entries are semantic errors.
/// The category axioms are not checked here.
FinCategory parse_category(std::string_view text);
std::string serialize(const FinCategory& c);

} // namespace eitrace
