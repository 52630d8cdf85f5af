#include "eitrace/constructions.hpp"

#include "eitrace/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

namespace eitrace {

namespace {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    std::size_t find(std::size_t x)
    {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return;
        if (a < b)
            parent_[b] = a;
        else
            parent_[a] = b;
    }

private:
    std::vector<std::size_t> parent_;
};

Components label(UnionFind& uf, std::size_t n)
{
    Components out;
    out.component_of.assign(n, 0);
    std::unordered_map<std::size_t, std::size_t> ids;
    for (std::size_t x = 0; x < n; ++x) {
        auto [it, inserted] = ids.emplace(uf.find(x), ids.size());
        out.component_of[x] = it->second;
    }
    out.count = ids.size();
    return out;
}

std::string pair_name(const FinCategory& c, MorphismId a, MorphismId b)
{
    return "(" + c.morphism(a).name + "," + c.morphism(b).name + ")";
}

// Objects of d(C), in (i, i', h1, h2) order.
std::vector<std::pair<MorphismId, MorphismId>> d_objects(const FinCategory& c)
{
    std::vector<std::pair<MorphismId, MorphismId>> pairs;
    for (ObjectId i = 0; i < c.num_objects(); ++i)
        for (ObjectId ip = 0; ip < c.num_objects(); ++ip)
            for (MorphismId h1 : c.hom(i, ip))
                for (MorphismId h2 : c.hom(ip, i))
                    pairs.emplace_back(h1, h2);
    return pairs;
}

struct DMorphism {
    std::size_t from, to;
    MorphismId a, b;
};

// Calls `emit` for every morphism of d(C) leaving each object, in order.
template <class Emit>
void for_each_d_morphism(const FinCategory& c, const std::vector<std::pair<MorphismId, MorphismId>>& pairs,
                         const std::map<std::pair<MorphismId, MorphismId>, std::size_t>& index, Emit&& emit)
{
    for (std::size_t x = 0; x < pairs.size(); ++x) {
        auto [h1, h2] = pairs[x];
        ObjectId i = c.src(h1);
        ObjectId ip = c.tgt(h1);
        for (ObjectId j = 0; j < c.num_objects(); ++j)
            for (MorphismId a : c.hom(j, i))
                for (ObjectId jp = 0; jp < c.num_objects(); ++jp)
                    for (MorphismId b : c.hom(ip, jp)) {
                        MorphismId k1 = c.compose(b, c.compose(h1, a));
                        for (MorphismId k2 : c.hom(jp, j))
                            if (c.compose(a, c.compose(k2, b)) == h2)
                                emit(DMorphism{x, index.at({k1, k2}), a, b});
                    }
    }
}

} // namespace

TwistedArrow twisted_arrow(const CategoryPtr& cp)
{
    const FinCategory& c = *cp;
    const std::size_t n = c.num_morphisms();
    TwistedArrow tw;
    std::vector<std::string> objects;
    for (MorphismId f = 0; f < n; ++f) {
        objects.push_back(c.morphism(f).name);
        tw.arrow.push_back(f);
    }
    std::vector<MorphismInfo> morphisms;
    std::unordered_map<std::size_t, MorphismId> index;
    const auto key = [n](std::size_t f, std::size_t u, std::size_t v) { return (f * n + u) * n + v; };
    for (MorphismId f = 0; f < n; ++f) {
        ObjectId i = c.src(f), j = c.tgt(f);
        for (ObjectId ip = 0; ip < c.num_objects(); ++ip)
            for (MorphismId u : c.hom(ip, i))
                for (ObjectId jp = 0; jp < c.num_objects(); ++jp)
                    for (MorphismId v : c.hom(j, jp)) {
                        MorphismId target = c.compose(v, c.compose(f, u));
                        index[key(f, u, v)] = morphisms.size();
                        morphisms.push_back({"[" + c.morphism(u).name + "," + c.morphism(f).name + "," +
                                                 c.morphism(v).name + "]",
                                             f, target});
                        tw.squares.emplace_back(u, v);
                    }
    }
    std::vector<MorphismId> identities;
    for (MorphismId f = 0; f < n; ++f)
        identities.push_back(index.at(key(f, c.identity(c.src(f)), c.identity(c.tgt(f)))));
    auto squares = tw.squares;
    auto sources = std::vector<MorphismId>();
    for (const auto& m : morphisms)
        sources.push_back(m.src);
    tw.category = make_category(FinCategory::build(
        std::move(objects), std::move(morphisms), std::move(identities), [&](MorphismId g, MorphismId f) {
            auto [u, v] = squares[f];
            auto [u2, v2] = squares[g];
            return index.at(key(sources[f], c.compose(u, u2), c.compose(v2, v)));
        }));

    auto target = make_category(product(opposite(c), c));
    tw.projection.domain = tw.category;
    tw.projection.codomain = target;
    const std::size_t k = c.num_objects();
    for (MorphismId f = 0; f < n; ++f)
        tw.projection.on_objects.push_back(c.src(f) * k + c.tgt(f));
    for (auto [u, v] : tw.squares)
        tw.projection.on_morphisms.push_back(u * n + v);
    return tw;
}

std::size_t DCategory::object_of_endo(const FinCategory& base, MorphismId h) const
{
    const MorphismId id = base.identity(base.src(h));
    for (std::size_t x = 0; x < pairs.size(); ++x)
        if (pairs[x].first == id && pairs[x].second == h)
            return x;
    throw InvalidInput("not an endomorphism: " + base.morphism(h).name);
}

DCategory d_category(const FinCategory& c)
{
    DCategory d;
    d.pairs = d_objects(c);
    std::map<std::pair<MorphismId, MorphismId>, std::size_t> index;
    std::vector<std::string> objects;
    for (std::size_t x = 0; x < d.pairs.size(); ++x) {
        index[d.pairs[x]] = x;
        objects.push_back(pair_name(c, d.pairs[x].first, d.pairs[x].second));
    }
    std::vector<MorphismInfo> morphisms;
    std::map<std::tuple<std::size_t, std::size_t, MorphismId, MorphismId>, MorphismId> mindex;
    for_each_d_morphism(c, d.pairs, index, [&](const DMorphism& m) {
        mindex[{m.from, m.to, m.a, m.b}] = morphisms.size();
        morphisms.push_back({pair_name(c, m.a, m.b) + ":" + objects[m.from] + "->" + objects[m.to], m.from, m.to});
        d.legs.emplace_back(m.a, m.b);
    });
    std::vector<MorphismId> identities;
    for (std::size_t x = 0; x < d.pairs.size(); ++x) {
        ObjectId i = c.src(d.pairs[x].first);
        ObjectId ip = c.tgt(d.pairs[x].first);
        identities.push_back(mindex.at({x, x, c.identity(i), c.identity(ip)}));
    }
    const auto legs = d.legs;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& m : morphisms)
        ends.emplace_back(m.src, m.tgt);
    d.category = make_category(FinCategory::build(
        std::move(objects), std::move(morphisms), std::move(identities), [&](MorphismId g, MorphismId f) {
            auto [a, b] = legs[f];
            auto [a2, b2] = legs[g];
            return mindex.at({ends[f].first, ends[g].second, c.compose(a, a2), c.compose(b2, b)});
        }));
    return d;
}

Components pi0(const FinCategory& c)
{
    UnionFind uf(c.num_objects());
    for (const auto& m : c.morphisms())
        uf.unite(m.src, m.tgt);
    return label(uf, c.num_objects());
}

Components d_components(const FinCategory& c, std::vector<std::pair<MorphismId, MorphismId>>* pairs_out)
{
    auto pairs = d_objects(c);
    std::map<std::pair<MorphismId, MorphismId>, std::size_t> index;
    for (std::size_t x = 0; x < pairs.size(); ++x)
        index[pairs[x]] = x;
    UnionFind uf(pairs.size());
    for_each_d_morphism(c, pairs, index, [&](const DMorphism& m) { uf.unite(m.from, m.to); });
    auto comps = label(uf, pairs.size());
    if (pairs_out)
        *pairs_out = std::move(pairs);
    return comps;
}

CyclicClasses cyclic_endo_classes(const FinCategory& c)
{
    const std::size_t n = c.num_morphisms();
    UnionFind uf(n);
    for (ObjectId a = 0; a < c.num_objects(); ++a)
        for (ObjectId b = 0; b < c.num_objects(); ++b)
            for (MorphismId m1 : c.hom(b, a))
                for (MorphismId m2 : c.hom(a, b))
                    uf.unite(c.compose(m1, m2), c.compose(m2, m1));
    CyclicClasses out;
    out.class_of.assign(n, FinCategory::kNone);
    std::unordered_map<std::size_t, std::size_t> ids;
    for (MorphismId m = 0; m < n; ++m) {
        if (c.src(m) != c.tgt(m))
            continue;
        auto [it, inserted] = ids.emplace(uf.find(m), ids.size());
        out.class_of[m] = it->second;
    }
    out.count = ids.size();
    return out;
}

EndoCategory endo_category(const FinCategory& c)
{
    EndoCategory e;
    e.object_of_endo.assign(c.num_morphisms(), FinCategory::kNone);
    std::vector<std::string> objects;
    for (MorphismId h = 0; h < c.num_morphisms(); ++h)
        if (c.src(h) == c.tgt(h)) {
            e.object_of_endo[h] = e.endo.size();
            e.endo.push_back(h);
            objects.push_back(c.morphism(h).name);
        }
    std::vector<MorphismInfo> morphisms;
    std::map<std::tuple<std::size_t, std::size_t, MorphismId>, MorphismId> index;
    for (std::size_t x = 0; x < e.endo.size(); ++x)
        for (std::size_t y = 0; y < e.endo.size(); ++y) {
            MorphismId h = e.endo[x], k = e.endo[y];
            for (MorphismId m : c.hom(c.src(h), c.src(k)))
                if (c.compose(m, h) == c.compose(k, m)) {
                    index[{x, y, m}] = morphisms.size();
                    morphisms.push_back({c.morphism(m).name + ":" + objects[x] + "->" + objects[y], x, y});
                    e.underlying.push_back(m);
                }
        }
    std::vector<MorphismId> identities;
    for (std::size_t x = 0; x < e.endo.size(); ++x)
        identities.push_back(index.at({x, x, c.identity(c.src(e.endo[x]))}));
    const auto underlying = e.underlying;
    std::vector<std::pair<std::size_t, std::size_t>> ends;
    for (const auto& m : morphisms)
        ends.emplace_back(m.src, m.tgt);
    e.category = make_category(FinCategory::build(
        std::move(objects), std::move(morphisms), std::move(identities), [&](MorphismId g, MorphismId f) {
            return index.at({ends[f].first, ends[g].second, c.compose(underlying[g], underlying[f])});
        }));
    return e;
}

Functor canonical_functor(const FinCategory& c, const DCategory& d, const EndoCategory& e)
{
    Functor f;
    f.domain = d.category;
    f.codomain = e.category;
    const FinCategory& dc = *d.category;
    const FinCategory& ec = *e.category;
    std::map<std::tuple<std::size_t, std::size_t, MorphismId>, MorphismId> index;
    for (MorphismId m = 0; m < ec.num_morphisms(); ++m)
        index[{ec.src(m), ec.tgt(m), e.underlying[m]}] = m;
    for (auto [h1, h2] : d.pairs)
        f.on_objects.push_back(e.object_of_endo[c.compose(h1, h2)]);
    for (MorphismId m = 0; m < dc.num_morphisms(); ++m)
        f.on_morphisms.push_back(
            index.at({f.on_objects[dc.src(m)], f.on_objects[dc.tgt(m)], d.legs[m].second}));
    return f;
}

std::vector<std::vector<std::size_t>> conjugacy_classes(const GroupTable& g)
{
    const std::size_t n = g.order();
    std::vector<std::size_t> assigned(n, FinCategory::kNone);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t h = 0; h < n; ++h) {
        if (assigned[h] != FinCategory::kNone)
            continue;
        std::vector<std::size_t> members;
        for (std::size_t m = 0; m < n; ++m) {
            std::size_t conj = g.table[g.table[m][h]][g.inverse[m]];
            if (assigned[conj] == FinCategory::kNone) {
                assigned[conj] = classes.size();
                members.push_back(conj);
            }
        }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    return classes;
}

EndoClassIndex endo_class_index(const FinCategory& c)
{
    EIReport ei = ei_report(c);
    if (!ei.ei)
        throw NotEI("endomorphism " + c.morphism(ei.non_invertible.front()).name + " is not invertible");
    EndoClassIndex index;
    IsoClasses iso = iso_classes(c);
    for (const auto& cls : iso.classes) {
        const GroupTable& g = ei.groups[cls.front()];
        for (const auto& members : conjugacy_classes(g)) {
            EndoClassEntry e;
            e.object = cls.front();
            for (auto p : members)
                e.members.push_back(g.elements[p]);
            std::sort(e.members.begin(), e.members.end());
            e.representative = e.members.front();
            e.class_size = members.size();
            e.group_order = g.order();
            std::size_t h = g.position(e.representative);
            for (std::size_t m = 0; m < g.order(); ++m)
                if (g.table[m][h] == g.table[h][m])
                    ++e.centralizer_order;
            index.entries.push_back(std::move(e));
        }
    }

    std::vector<std::pair<MorphismId, MorphismId>> pairs;
    Components comps = d_components(c, &pairs);
    if (comps.count != index.size())
        throw InternalMismatch("pi0(dI) has " + std::to_string(comps.count) + " components but the index has " +
                               std::to_string(index.size()) + " entries");
    std::vector<bool> hit(comps.count, false);
    for (const auto& e : index.entries) {
        auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(c.identity(e.object), e.representative));
        std::size_t comp = comps.component_of[static_cast<std::size_t>(it - pairs.begin())];
        if (hit[comp])
            throw InternalMismatch("two index entries share a component of dI");
        hit[comp] = true;
    }
    return index;
}

std::size_t EndoClassIndex::locate(const FinCategory& c, MorphismId h) const
{
    const ObjectId x = c.src(h);
    if (c.tgt(h) != x)
        throw InvalidInput(c.morphism(h).name + " is not an endomorphism");
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const auto& e = entries[k];
        for (MorphismId m : c.hom(x, e.object)) {
            auto inv = inverse_of(c, m);
            if (!inv)
                continue;
            MorphismId conj = c.compose(m, c.compose(h, *inv));
            if (std::binary_search(e.members.begin(), e.members.end(), conj))
                return k;
            break; // any isomorphism x -> object gives a conjugate answer
        }
    }
    throw InternalMismatch("no index entry for " + c.morphism(h).name);
}

std::size_t characteristic(const FinCategory& c)
{
    EIReport ei = ei_report(c);
    if (!ei.ei)
        throw NotEI("endomorphism " + c.morphism(ei.non_invertible.front()).name + " is not invertible");
    std::size_t rad = 1;
    for (const auto& g : ei.groups) {
        std::size_t n = g.order();
        for (std::size_t p = 2; p * p <= n; ++p) {
            if (n % p != 0)
                continue;
            if (rad % p != 0)
                rad *= p;
            while (n % p == 0)
                n /= p;
        }
        if (n > 1 && rad % n != 0)
            rad *= n;
    }
    return rad;
}

} // namespace eitrace
