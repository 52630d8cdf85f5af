#include "eitrace/fincat.hpp"

#include "eitrace/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace eitrace {

FinCategory::FinCategory(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                         std::vector<MorphismId> identities,
                         const std::vector<std::array<MorphismId, 3>>& composites)
    : objects_(std::move(objects)), morphisms_(std::move(morphisms)), identities_(std::move(identities))
{
    index_names();
    const std::size_t n = morphisms_.size();
    for (MorphismId m = 0; m < n; ++m) {
        table_[identities_[tgt(m)] * n + m] = static_cast<std::uint32_t>(m);
        table_[m * n + identities_[src(m)]] = static_cast<std::uint32_t>(m);
    }
    for (const auto& [g, f, gf] : composites) {
        if (g >= n || f >= n || gf >= n)
            throw InvalidInput("composition entry refers to an unknown morphism");
        if (!composable(g, f))
            throw InvalidInput("composition entry (" + morphisms_[g].name + ", " + morphisms_[f].name +
                               ") is not a composable pair");
        table_[g * n + f] = static_cast<std::uint32_t>(gf);
    }
}

FinCategory FinCategory::build(std::vector<std::string> objects, std::vector<MorphismInfo> morphisms,
                               std::vector<MorphismId> identities,
                               const std::function<MorphismId(MorphismId, MorphismId)>& compose)
{
    FinCategory c;
    c.objects_ = std::move(objects);
    c.morphisms_ = std::move(morphisms);
    c.identities_ = std::move(identities);
    c.index_names();
    const std::size_t n = c.morphisms_.size();
    const std::size_t k = c.objects_.size();
    for (ObjectId a = 0; a < k; ++a)
        for (ObjectId b = 0; b < k; ++b)
            for (MorphismId f : c.hom(a, b))
                for (ObjectId d = 0; d < k; ++d)
                    for (MorphismId g : c.hom(b, d))
                        c.table_[g * n + f] = static_cast<std::uint32_t>(compose(g, f));
    return c;
}

void FinCategory::index_names()
{
    const std::size_t k = objects_.size();
    const std::size_t n = morphisms_.size();
    if (identities_.size() != k)
        throw InvalidInput("every object needs exactly one identity");
    if (n >= kNone)
        throw InvalidInput("too many morphisms");
    for (ObjectId o = 0; o < k; ++o)
        if (!object_index_.emplace(objects_[o], o).second)
            throw InvalidInput("duplicate object \"" + objects_[o] + "\"");
    for (MorphismId m = 0; m < n; ++m) {
        if (morphisms_[m].src >= k || morphisms_[m].tgt >= k)
            throw InvalidInput("morphism \"" + morphisms_[m].name + "\" has an unknown endpoint");
        if (!morphism_index_.emplace(morphisms_[m].name, m).second)
            throw InvalidInput("duplicate morphism \"" + morphisms_[m].name + "\"");
    }
    for (auto id : identities_)
        if (id >= n)
            throw InvalidInput("identity refers to an unknown morphism");
    table_.assign(n * n, kNone);
    homs_.assign(k * k, {});
    for (MorphismId m = 0; m < n; ++m)
        homs_[morphisms_[m].src * k + morphisms_[m].tgt].push_back(m);
}

std::optional<ObjectId> FinCategory::find_object(std::string_view name) const
{
    auto it = object_index_.find(std::string(name));
    if (it == object_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<MorphismId> FinCategory::find_morphism(std::string_view name) const
{
    auto it = morphism_index_.find(std::string(name));
    if (it == morphism_index_.end())
        return std::nullopt;
    return it->second;
}

std::optional<MorphismId> FinCategory::try_compose(MorphismId g, MorphismId f) const
{
    std::uint32_t v = table_[g * morphisms_.size() + f];
    if (v == kNone)
        return std::nullopt;
    return v;
}

MorphismId FinCategory::compose(MorphismId g, MorphismId f) const
{
    auto r = try_compose(g, f);
    if (!r)
        throw InvalidInput("composite " + morphisms_[g].name + " o " + morphisms_[f].name + " is undefined");
    return *r;
}

bool operator==(const FinCategory& a, const FinCategory& b)
{
    if (a.objects_ != b.objects_ || a.identities_ != b.identities_ || a.table_ != b.table_)
        return false;
    if (a.morphisms_.size() != b.morphisms_.size())
        return false;
    for (std::size_t m = 0; m < a.morphisms_.size(); ++m) {
        const auto& x = a.morphisms_[m];
        const auto& y = b.morphisms_[m];
        if (x.name != y.name || x.src != y.src || x.tgt != y.tgt)
            return false;
    }
    return true;
}

ValidationReport validate(const FinCategory& c)
{
    ValidationReport report;
    auto& v = report.violations;
    const auto name = [&](MorphismId m) { return c.morphism(m).name; };
    for (ObjectId o = 0; o < c.num_objects(); ++o) {
        MorphismId id = c.identity(o);
        if (c.src(id) != o || c.tgt(id) != o)
            v.push_back("identity " + name(id) + " of " + c.object_name(o) + " is not an endomorphism of it");
    }
    for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
        for (ObjectId d = 0; d < c.num_objects(); ++d) {
            for (MorphismId g : c.hom(c.tgt(f), d)) {
                auto gf = c.try_compose(g, f);
                if (!gf) {
                    v.push_back("missing composite " + name(g) + " o " + name(f));
                    continue;
                }
                if (c.src(*gf) != c.src(f) || c.tgt(*gf) != c.tgt(g))
                    v.push_back("composite " + name(g) + " o " + name(f) + " = " + name(*gf) +
                                " has the wrong source or target");
            }
        }
    }
    for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
        MorphismId left = c.identity(c.tgt(f));
        MorphismId right = c.identity(c.src(f));
        if (c.try_compose(left, f) != f)
            v.push_back("unit law fails: " + name(left) + " o " + name(f) + " != " + name(f));
        if (c.try_compose(f, right) != f)
            v.push_back("unit law fails: " + name(f) + " o " + name(right) + " != " + name(f));
    }
    if (!v.empty())
        return report; // associativity is meaningless on a broken table
    for (MorphismId f = 0; f < c.num_morphisms(); ++f)
        for (ObjectId b = 0; b < c.num_objects(); ++b)
            for (MorphismId g : c.hom(c.tgt(f), b)) {
                MorphismId gf = c.compose(g, f);
                for (ObjectId a = 0; a < c.num_objects(); ++a)
                    for (MorphismId h : c.hom(b, a)) {
                        if (c.compose(c.compose(h, g), f) != c.compose(h, gf))
                            v.push_back("associativity fails for (" + name(h) + ", " + name(g) + ", " +
                                        name(f) + ")");
                    }
            }
    return report;
}

void require_valid(const FinCategory& c, std::string_view what)
{
    auto report = validate(c);
    if (report.ok())
        return;
    std::ostringstream os;
    os << what << " is not a category: " << report.violations.front();
    if (report.violations.size() > 1)
        os << " (and " << report.violations.size() - 1 << " more)";
    throw InvalidInput(os.str());
}

ValidationReport validate(const Functor& f)
{
    ValidationReport report;
    auto& v = report.violations;
    const FinCategory& d = *f.domain;
    const FinCategory& c = *f.codomain;
    if (f.on_objects.size() != d.num_objects() || f.on_morphisms.size() != d.num_morphisms()) {
        v.push_back("functor maps have the wrong size");
        return report;
    }
    for (auto o : f.on_objects)
        if (o >= c.num_objects()) {
            v.push_back("object map leaves the codomain");
            return report;
        }
    for (auto m : f.on_morphisms)
        if (m >= c.num_morphisms()) {
            v.push_back("morphism map leaves the codomain");
            return report;
        }
    for (MorphismId m = 0; m < d.num_morphisms(); ++m) {
        MorphismId fm = f.on_morphisms[m];
        if (c.src(fm) != f.on_objects[d.src(m)] || c.tgt(fm) != f.on_objects[d.tgt(m)])
            v.push_back("functor does not preserve the endpoints of " + d.morphism(m).name);
    }
    for (ObjectId o = 0; o < d.num_objects(); ++o)
        if (f.on_morphisms[d.identity(o)] != c.identity(f.on_objects[o]))
            v.push_back("functor does not preserve the identity of " + d.object_name(o));
    if (!v.empty())
        return report;
    for (MorphismId a = 0; a < d.num_morphisms(); ++a)
        for (ObjectId x = 0; x < d.num_objects(); ++x)
            for (MorphismId b : d.hom(d.tgt(a), x)) {
                auto lhs = c.try_compose(f.on_morphisms[b], f.on_morphisms[a]);
                if (lhs != f.on_morphisms[d.compose(b, a)])
                    v.push_back("functor does not preserve " + d.morphism(b).name + " o " + d.morphism(a).name);
            }
    return report;
}

FinCategory opposite(const FinCategory& c)
{
    std::vector<MorphismInfo> morphisms = c.morphisms();
    for (auto& m : morphisms)
        std::swap(m.src, m.tgt);
    return FinCategory::build(c.object_names(), std::move(morphisms), c.identities(),
                              [&](MorphismId g, MorphismId f) { return c.compose(f, g); });
}

FinCategory product(const FinCategory& c, const FinCategory& d)
{
    const std::size_t nd_obj = d.num_objects();
    const std::size_t nd_mor = d.num_morphisms();
    std::vector<std::string> objects;
    for (ObjectId a = 0; a < c.num_objects(); ++a)
        for (ObjectId b = 0; b < nd_obj; ++b)
            objects.push_back("(" + c.object_name(a) + "," + d.object_name(b) + ")");
    std::vector<MorphismInfo> morphisms;
    for (MorphismId f = 0; f < c.num_morphisms(); ++f)
        for (MorphismId g = 0; g < nd_mor; ++g)
            morphisms.push_back({"(" + c.morphism(f).name + "," + d.morphism(g).name + ")",
                                 c.src(f) * nd_obj + d.src(g), c.tgt(f) * nd_obj + d.tgt(g)});
    std::vector<MorphismId> identities;
    for (ObjectId a = 0; a < c.num_objects(); ++a)
        for (ObjectId b = 0; b < nd_obj; ++b)
            identities.push_back(c.identity(a) * nd_mor + d.identity(b));
    return FinCategory::build(std::move(objects), std::move(morphisms), std::move(identities),
                              [&](MorphismId x, MorphismId y) {
                                  return c.compose(x / nd_mor, y / nd_mor) * nd_mor +
                                         d.compose(x % nd_mor, y % nd_mor);
                              });
}

FinCategory full_subcategory(const FinCategory& c, const std::vector<ObjectId>& objects)
{
    std::vector<std::size_t> local(c.num_objects(), FinCategory::kNone);
    std::vector<std::string> names;
    for (std::size_t k = 0; k < objects.size(); ++k) {
        local[objects[k]] = k;
        names.push_back(c.object_name(objects[k]));
    }
    std::vector<MorphismId> kept;
    std::vector<std::size_t> position(c.num_morphisms(), FinCategory::kNone);
    std::vector<MorphismInfo> morphisms;
    for (MorphismId m = 0; m < c.num_morphisms(); ++m) {
        if (local[c.src(m)] == FinCategory::kNone || local[c.tgt(m)] == FinCategory::kNone)
            continue;
        position[m] = kept.size();
        kept.push_back(m);
        morphisms.push_back({c.morphism(m).name, local[c.src(m)], local[c.tgt(m)]});
    }
    std::vector<MorphismId> identities;
    for (auto o : objects)
        identities.push_back(position[c.identity(o)]);
    return FinCategory::build(std::move(names), std::move(morphisms), std::move(identities),
                              [&](MorphismId g, MorphismId f) { return position[c.compose(kept[g], kept[f])]; });
}

FinCategory terminal_category()
{
    return FinCategory({"*"}, {{"id", 0, 0}}, {0}, {});
}

std::size_t GroupTable::position(MorphismId m) const
{
    auto it = std::find(elements.begin(), elements.end(), m);
    if (it == elements.end())
        throw InvalidInput("morphism is not an automorphism of this object");
    return static_cast<std::size_t>(it - elements.begin());
}

EIReport ei_report(const FinCategory& c)
{
    EIReport report;
    for (ObjectId o = 0; o < c.num_objects(); ++o) {
        GroupTable g;
        g.object = o;
        g.elements = c.hom(o, o);
        const std::size_t n = g.elements.size();
        std::vector<std::size_t> pos(c.num_morphisms(), 0);
        for (std::size_t a = 0; a < n; ++a)
            pos[g.elements[a]] = a;
        g.table.assign(n, std::vector<std::size_t>(n));
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                g.table[a][b] = pos[c.compose(g.elements[a], g.elements[b])];
        const std::size_t e = pos[c.identity(o)];
        g.inverse.assign(n, FinCategory::kNone);
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = 0; b < n; ++b)
                if (g.table[a][b] == e && g.table[b][a] == e) {
                    g.inverse[a] = b;
                    break;
                }
            if (g.inverse[a] == FinCategory::kNone) {
                report.ei = false;
                report.non_invertible.push_back(g.elements[a]);
            }
        }
        report.groups.push_back(std::move(g));
    }
    return report;
}

bool is_ei(const FinCategory& c)
{
    return ei_report(c).ei;
}

std::optional<MorphismId> inverse_of(const FinCategory& c, MorphismId m)
{
    for (MorphismId g : c.hom(c.tgt(m), c.src(m)))
        if (c.compose(g, m) == c.identity(c.src(m)) && c.compose(m, g) == c.identity(c.tgt(m)))
            return g;
    return std::nullopt;
}

namespace {

std::optional<MorphismId> find_iso(const FinCategory& c, ObjectId a, ObjectId b)
{
    for (MorphismId m : c.hom(a, b))
        if (inverse_of(c, m))
            return m;
    return std::nullopt;
}

} // namespace

IsoClasses iso_classes(const FinCategory& c)
{
    IsoClasses out;
    out.class_of.assign(c.num_objects(), FinCategory::kNone);
    for (ObjectId a = 0; a < c.num_objects(); ++a) {
        if (out.class_of[a] != FinCategory::kNone)
            continue;
        std::vector<ObjectId> members;
        for (ObjectId b = a; b < c.num_objects(); ++b)
            if (out.class_of[b] == FinCategory::kNone && find_iso(c, a, b)) {
                out.class_of[b] = out.classes.size();
                members.push_back(b);
            }
        out.classes.push_back(std::move(members));
    }
    return out;
}

Core core(const FinCategory& c)
{
    Core out;
    IsoClasses iso = iso_classes(c);
    for (const auto& cls : iso.classes)
        out.representatives.push_back(cls.front());
    out.core_of = iso.class_of;
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        out.to_core.push_back(*find_iso(c, o, out.representatives[out.core_of[o]]));
    out.category = full_subcategory(c, out.representatives);
    // Morphism order in a full subcategory follows the input order.
    std::vector<bool> keep(c.num_objects(), false);
    for (auto r : out.representatives)
        keep[r] = true;
    for (MorphismId m = 0; m < c.num_morphisms(); ++m)
        if (keep[c.src(m)] && keep[c.tgt(m)])
            out.morphism_map.push_back(m);
    return out;
}

bool is_skeletal(const FinCategory& c)
{
    return iso_classes(c).classes.size() == c.num_objects();
}

} // namespace eitrace
