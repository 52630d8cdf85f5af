#include "eitrace/harness.hpp"

#include "eitrace/errors.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

namespace eitrace {

// ---------------------------------------------------------------------------
// Named categories

FinCategory cyclic_group(std::size_t n)
{
    if (n == 0)
        throw InvalidInput("cyclic group of order 0");
    std::vector<MorphismInfo> mor;
    for (std::size_t k = 0; k < n; ++k)
        mor.push_back({k == 0 ? "e" : k == 1 ? "g" : "g^" + std::to_string(k), 0, 0});
    return FinCategory::build({"*"}, std::move(mor), {0}, [n](MorphismId g, MorphismId f) { return (g + f) % n; });
}

FinCategory symmetric_group(std::size_t n)
{
    if (n == 0 || n > 5)
        throw InvalidInput("symmetric group degree must be between 1 and 5");
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do
        perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<MorphismInfo> mor;
    for (std::size_t k = 0; k < perms.size(); ++k) {
        std::string name = "s";
        for (auto x : perms[k])
            name += std::to_string(x);
        mor.push_back({k == 0 ? "e" : name, 0, 0});
    }
    return FinCategory::build({"*"}, std::move(mor), {0}, [&](MorphismId g, MorphismId f) {
        std::vector<std::size_t> gf(n);
        for (std::size_t x = 0; x < n; ++x)
            gf[x] = perms[g][perms[f][x]];
        return static_cast<MorphismId>(std::find(perms.begin(), perms.end(), gf) - perms.begin());
    });
}

FinCategory poset_category(const std::vector<std::vector<bool>>& leq)
{
    const std::size_t n = leq.size();
    std::vector<std::string> objects;
    for (std::size_t i = 0; i < n; ++i)
        objects.push_back("p" + std::to_string(i));
    std::vector<MorphismInfo> mor;
    std::vector<std::vector<MorphismId>> arrow(n, std::vector<MorphismId>(n, FinCategory::kNone));
    std::vector<MorphismId> ids(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq[i][j] || i == j) {
                arrow[i][j] = mor.size();
                if (i == j)
                    ids[i] = mor.size();
                mor.push_back({i == j ? "id_" + objects[i] : objects[i] + "<" + objects[j], i, j});
            }
    std::vector<MorphismInfo> copy = mor;
    return FinCategory::build(std::move(objects), std::move(mor), std::move(ids), [&](MorphismId g, MorphismId f) {
        MorphismId gf = arrow[copy[f].src][copy[g].tgt];
        if (gf == FinCategory::kNone)
            throw InvalidInput("relation is not transitive");
        return gf;
    });
}

FinCategory pushout_category()
{
    return FinCategory({"(1,1)", "(0,1)", "(1,0)"},
                       {{"id(1,1)", 0, 0}, {"id(0,1)", 1, 1}, {"id(1,0)", 2, 2}, {"a", 1, 0}, {"b", 2, 0}}, {0, 1, 2},
                       {});
}

FinCategory arrow_category()
{
    return FinCategory({"0", "1"}, {{"id0", 0, 0}, {"id1", 1, 1}, {"a", 0, 1}}, {0, 1}, {});
}

FinCategory translation_groupoid(std::size_t n, const std::vector<std::size_t>& sigma)
{
    const std::size_t m = sigma.size();
    std::vector<std::vector<std::size_t>> power(n, std::vector<std::size_t>(m));
    for (std::size_t x = 0; x < m; ++x) {
        if (sigma[x] >= m)
            throw InvalidInput("translation groupoid: sigma is not a permutation");
        std::size_t y = x;
        for (std::size_t k = 0; k < n; ++k) {
            power[k][x] = y;
            y = sigma[y];
        }
        if (y != x)
            throw InvalidInput("translation groupoid: a cycle length does not divide " + std::to_string(n));
    }
    std::vector<std::string> objects;
    for (std::size_t x = 0; x < m; ++x)
        objects.push_back("x" + std::to_string(x));
    std::vector<MorphismInfo> mor;
    std::vector<MorphismId> ids;
    for (std::size_t x = 0; x < m; ++x) {
        ids.push_back(mor.size());
        for (std::size_t k = 0; k < n; ++k)
            mor.push_back({(k == 0 ? std::string("e") : "g^" + std::to_string(k)) + "@" + objects[x], x, power[k][x]});
    }
    return FinCategory::build(std::move(objects), std::move(mor), std::move(ids), [n](MorphismId g, MorphismId f) {
        const std::size_t x = f / n;
        return x * n + (g % n + f % n) % n;
    });
}

FinCategory ei_two_object(bool free_action)
{
    // 0 id_x, 1 t, 2 id_y, 3 u, 4 v
    std::vector<MorphismInfo> mor{{"id_x", 0, 0}, {"t", 0, 0}, {"id_y", 1, 1}, {"u", 0, 1}};
    if (free_action)
        mor.push_back({"v", 0, 1});
    std::vector<std::array<MorphismId, 3>> table{{1, 1, 0}};
    if (free_action) {
        table.push_back({3, 1, 4});
        table.push_back({4, 1, 3});
    } else {
        table.push_back({3, 1, 3});
    }
    return FinCategory({"x", "y"}, std::move(mor), {0, 2}, table);
}

std::vector<CatalogEntry> catalog()
{
    const auto chain = [](std::size_t n) {
        std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j)
                leq[i][j] = true;
        return leq;
    };
    std::vector<std::vector<bool>> diamond(4, std::vector<bool>(4, false));
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}})
        diamond[i][j] = true;
    std::vector<std::vector<bool>> vee(3, std::vector<bool>(3, false));
    vee[0][1] = vee[0][2] = true;
    std::vector<std::vector<bool>> discrete(2, std::vector<bool>(2, false));

    std::vector<CatalogEntry> out;
    const auto add = [&](std::string name, FinCategory c) { out.push_back({std::move(name), make_category(std::move(c))}); };
    add("pushout", pushout_category());
    add("arrow", arrow_category());
    add("terminal", terminal_category());
    add("discrete2", poset_category(discrete));
    add("C2", cyclic_group(2));
    add("C3", cyclic_group(3));
    add("C4", cyclic_group(4));
    add("C6", cyclic_group(6));
    add("S3", symmetric_group(3));
    add("chain3", poset_category(chain(3)));
    add("diamond", poset_category(diamond));
    add("vee", poset_category(vee));
    add("chain2xC2", product(poset_category(chain(2)), cyclic_group(2)));
    add("C2-on-3-points", translation_groupoid(2, {1, 0, 2}));
    add("C2-free-on-arrows", ei_two_object(true));
    add("C2-trivial-on-arrow", ei_two_object(false));
    return out;
}

// ---------------------------------------------------------------------------
// Generators

std::optional<CategoryKind> parse_kind(std::string_view name)
{
    if (name == "poset")
        return CategoryKind::Poset;
    if (name == "group")
        return CategoryKind::Group;
    if (name == "cyclic")
        return CategoryKind::Cyclic;
    if (name == "symmetric")
        return CategoryKind::Symmetric;
    if (name == "product")
        return CategoryKind::Product;
    if (name == "groupoid" || name == "translation-groupoid")
        return CategoryKind::Groupoid;
    return std::nullopt;
}

std::string kind_name(CategoryKind kind)
{
    switch (kind) {
    case CategoryKind::Poset: return "poset";
    case CategoryKind::Group: return "group";
    case CategoryKind::Cyclic: return "cyclic";
    case CategoryKind::Symmetric: return "symmetric";
    case CategoryKind::Product: return "product";
    case CategoryKind::Groupoid: return "groupoid";
    }
    return "unknown";
}

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

long small_int(Rng& rng, long bound)
{
    return std::uniform_int_distribution<long>(-bound, bound)(rng);
}

FinCategory random_poset(Rng& rng, std::size_t lo, std::size_t hi)
{
    const std::size_t n = uniform(rng, lo, hi);
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    std::bernoulli_distribution edge(0.4);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            leq[i][j] = edge(rng);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (leq[i][k] && leq[k][j])
                    leq[i][j] = true;
    FinCategory p = poset_category(leq);
    // reversing the order makes the constant diagram non-projective more often
    return std::bernoulli_distribution(0.5)(rng) ? opposite(p) : p;
}

FinCategory random_group(Rng& rng)
{
    const std::size_t pick = uniform(rng, 1, 7);
    return pick == 7 ? symmetric_group(3) : cyclic_group(pick);
}

FinCategory random_groupoid(Rng& rng)
{
    static const std::size_t orders[] = {2, 3, 4, 6};
    const std::size_t n = orders[uniform(rng, 0, 3)];
    const std::size_t m = uniform(rng, 2, 4);
    std::vector<std::size_t> divisors;
    for (std::size_t d = 1; d <= n; ++d)
        if (n % d == 0)
            divisors.push_back(d);
    std::vector<std::size_t> points(m);
    std::iota(points.begin(), points.end(), std::size_t{0});
    std::shuffle(points.begin(), points.end(), rng);
    std::vector<std::size_t> sigma(m);
    std::size_t at = 0;
    while (at < m) {
        std::size_t len;
        do
            len = divisors[uniform(rng, 0, divisors.size() - 1)];
        while (at + len > m);
        for (std::size_t t = 0; t < len; ++t)
            sigma[points[at + t]] = points[at + (t + 1) % len];
        at += len;
    }
    return translation_groupoid(n, sigma);
}

} // namespace

FinCategory generate_category(CategoryKind kind, std::uint64_t seed)
{
    Rng rng(seed);
    switch (kind) {
    case CategoryKind::Poset:
        return random_poset(rng, 1, 6);
    case CategoryKind::Group:
        return random_group(rng);
    case CategoryKind::Cyclic:
        return cyclic_group(uniform(rng, 1, 6));
    case CategoryKind::Symmetric:
        return symmetric_group(uniform(rng, 1, 3));
    case CategoryKind::Product: {
        FinCategory p = random_poset(rng, 2, 3);
        FinCategory g = p.num_morphisms() <= 4 && uniform(rng, 0, 2) == 0 ? symmetric_group(3)
                                                                          : cyclic_group(uniform(rng, 2, 3));
        return product(p, g);
    }
    case CategoryKind::Groupoid:
        return random_groupoid(rng);
    }
    throw InvalidInput("unknown category kind");
}

namespace {

/// Q[I(-, j) / <g>] for an automorphism g of j.
Representation permutation_presheaf(const CategoryPtr& base, ObjectId j, MorphismId g)
{
    const FinCategory& c = *base;
    std::vector<MorphismId> subgroup{c.identity(j)};
    for (MorphismId p = g; p != c.identity(j); p = c.compose(g, p))
        subgroup.push_back(p);
    // orbit label of each morphism into j: least member of its orbit
    std::vector<std::size_t> label(c.num_morphisms(), FinCategory::kNone);
    std::vector<std::vector<MorphismId>> basis(c.num_objects());
    std::vector<std::size_t> position(c.num_morphisms(), 0);
    for (ObjectId i = 0; i < c.num_objects(); ++i)
        for (MorphismId m : c.hom(i, j)) {
            if (label[m] != FinCategory::kNone)
                continue;
            position[m] = basis[i].size();
            basis[i].push_back(m);
            for (MorphismId s : subgroup) {
                label[c.compose(s, m)] = m;
            }
        }
    std::vector<std::size_t> dims;
    for (const auto& b : basis)
        dims.push_back(b.size());
    std::vector<Matrix> action;
    for (MorphismId h = 0; h < c.num_morphisms(); ++h) {
        const ObjectId i = c.src(h), ip = c.tgt(h);
        Matrix a(dims[i], dims[ip]);
        for (std::size_t col = 0; col < basis[ip].size(); ++col)
            a(position[label[c.compose(basis[ip][col], h)]], col) = 1;
        action.push_back(std::move(a));
    }
    return Representation(base, std::move(dims), std::move(action));
}

Representation direct_sum(const Representation& a, const Representation& b)
{
    std::vector<std::size_t> dims;
    for (ObjectId o = 0; o < a.category().num_objects(); ++o)
        dims.push_back(a.dim(o) + b.dim(o));
    std::vector<Matrix> action;
    for (MorphismId h = 0; h < a.category().num_morphisms(); ++h) {
        const Matrix blocks[] = {a.action(h), b.action(h)};
        action.push_back(block_diagonal(blocks));
    }
    return Representation(a.base(), std::move(dims), std::move(action));
}

/// A / S where S is the sub-presheaf generated by v in A_x.
Representation quotient_by_generated(const Representation& a, ObjectId x, const Matrix& v)
{
    const FinCategory& c = a.category();
    std::vector<Matrix> sub, complement, project;
    std::vector<std::size_t> dims;
    for (ObjectId i = 0; i < c.num_objects(); ++i) {
        Matrix span(a.dim(i), 0);
        for (MorphismId h : c.hom(i, x))
            span = hstack(span, a.action(h) * v);
        Matrix s = image(span);
        Echelon e = row_echelon(hstack(s, Matrix::identity(a.dim(i))));
        std::vector<std::size_t> extra;
        for (auto p : e.pivots)
            if (p >= s.cols())
                extra.push_back(p - s.cols());
        Matrix w = Matrix::identity(a.dim(i)).select_columns(extra);
        Matrix left = left_inverse(hstack(s, w));
        project.push_back(left.block(s.cols(), 0, w.cols(), a.dim(i)));
        complement.push_back(std::move(w));
        dims.push_back(extra.size());
    }
    std::vector<Matrix> action;
    for (MorphismId h = 0; h < c.num_morphisms(); ++h)
        action.push_back(project[c.src(h)] * a.action(h) * complement[c.tgt(h)]);
    return Representation(a.base(), std::move(dims), std::move(action));
}

Matrix random_unitriangular_product(Rng& rng, std::size_t n)
{
    Matrix lower = Matrix::identity(n), upper = Matrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            lower(i, j) = small_int(rng, 2);
            upper(j, i) = small_int(rng, 2);
        }
    return lower * upper;
}

} // namespace

std::vector<std::vector<Matrix>> natural_endomorphisms(const Representation& a)
{
    const FinCategory& c = a.category();
    const std::size_t n = c.num_objects();
    std::vector<std::size_t> off(n + 1, 0);
    for (ObjectId i = 0; i < n; ++i)
        off[i + 1] = off[i] + a.dim(i) * a.dim(i);
    std::size_t rows = 0;
    for (MorphismId h = 0; h < c.num_morphisms(); ++h)
        if (!c.is_identity(h))
            rows += a.dim(c.src(h)) * a.dim(c.tgt(h));
    // A(h) Phi_j = Phi_i A(h) for h : i -> j, row-major vectorization
    Matrix system(rows, off[n]);
    std::size_t row = 0;
    for (MorphismId h = 0; h < c.num_morphisms(); ++h) {
        if (c.is_identity(h))
            continue;
        const ObjectId i = c.src(h), j = c.tgt(h);
        const Matrix& ah = a.action(h);
        const Matrix lhs = kron(ah, Matrix::identity(a.dim(j)));
        const Matrix rhs = kron(Matrix::identity(a.dim(i)), ah.transpose());
        Matrix bj = system.block(row, off[j], lhs.rows(), lhs.cols());
        system.set_block(row, off[j], bj + lhs);
        Matrix bi = system.block(row, off[i], rhs.rows(), rhs.cols());
        system.set_block(row, off[i], bi - rhs);
        row += lhs.rows();
    }
    const Matrix k = kernel(system);
    std::vector<std::vector<Matrix>> basis;
    for (std::size_t col = 0; col < k.cols(); ++col) {
        std::vector<Matrix> phi;
        for (ObjectId i = 0; i < n; ++i) {
            const std::size_t d = a.dim(i);
            Matrix m(d, d);
            for (std::size_t r = 0; r < d; ++r)
                for (std::size_t s = 0; s < d; ++s)
                    m(r, s) = k(off[i] + r * d + s, col);
            phi.push_back(std::move(m));
        }
        basis.push_back(std::move(phi));
    }
    return basis;
}

namespace {

/// f = sum_k Phi_k (x) M_k over a basis Phi_k of Nat(A, A) with random M_k.
TwistedEndo random_natural_endo(Representation a, Rng& rng)
{
    const std::size_t dS = uniform(rng, 1, 2), dT = uniform(rng, 1, 2);
    std::vector<Matrix> comps;
    for (ObjectId i = 0; i < a.category().num_objects(); ++i)
        comps.emplace_back(a.dim(i) * dT, a.dim(i) * dS);
    for (const auto& phi : natural_endomorphisms(a)) {
        Matrix twist(dT, dS);
        for (std::size_t r = 0; r < dT; ++r)
            for (std::size_t s = 0; s < dS; ++s)
                twist(r, s) = small_int(rng, 2);
        for (std::size_t i = 0; i < comps.size(); ++i)
            comps[i] += kron(phi[i], twist);
    }
    return TwistedEndo(std::move(a), dS, dT, std::move(comps));
}

bool has_composites(const FinCategory& c)
{
    for (MorphismId g = 0; g < c.num_morphisms(); ++g)
        for (MorphismId f = 0; f < c.num_morphisms(); ++f)
            if (!c.is_identity(g) && !c.is_identity(f) && c.composable(g, f))
                return true;
    return false;
}

} // namespace

TwistedEndo generate_free_diagram(const CategoryPtr& base, const std::vector<std::size_t>& dims, std::uint64_t seed)
{
    const FinCategory& c = *base;
    if (has_composites(c))
        throw InvalidInput("free diagrams need a category without composable non-identity pairs");
    if (dims.size() != c.num_objects())
        throw InvalidInput("one dimension per object expected");
    Rng rng(seed);
    std::vector<Matrix> action;
    for (MorphismId h = 0; h < c.num_morphisms(); ++h) {
        Matrix m(dims[c.src(h)], dims[c.tgt(h)]);
        if (c.is_identity(h))
            m = Matrix::identity(dims[c.src(h)]);
        else
            for (std::size_t r = 0; r < m.rows(); ++r)
                for (std::size_t s = 0; s < m.cols(); ++s)
                    m(r, s) = small_int(rng, 3);
        action.push_back(std::move(m));
    }
    return random_natural_endo(Representation(base, dims, std::move(action)), rng);
}

TwistedEndo generate_diagram(const CategoryPtr& base, std::uint64_t seed, std::size_t maxdim)
{
    const FinCategory& c = *base;
    Rng rng(seed);
    const std::size_t nobj = c.num_objects();
    if (maxdim == 0)
        throw InvalidInput("maxdim must be positive");
    if (!has_composites(c) && std::bernoulli_distribution(0.5)(rng)) {
        std::vector<std::size_t> dims;
        for (ObjectId i = 0; i < nobj; ++i)
            dims.push_back(uniform(rng, 0, maxdim));
        return generate_free_diagram(base, dims, rng());
    }

    Representation a(base, std::vector<std::size_t>(nobj, 0), [&] {
        std::vector<Matrix> zero;
        for (MorphismId h = 0; h < c.num_morphisms(); ++h)
            zero.emplace_back(0, 0);
        return zero;
    }());
    if (nobj > 0) {
        const std::size_t summands = uniform(rng, 1, 4);
        for (std::size_t s = 0; s < summands; ++s) {
            if (uniform(rng, 0, 3) == 0) {
                a = direct_sum(a, Representation::constant(base, 1));
                continue;
            }
            const ObjectId j = uniform(rng, 0, nobj - 1);
            const auto& aut = c.hom(j, j);
            const MorphismId g = aut[uniform(rng, 0, aut.size() - 1)];
            a = direct_sum(a, permutation_presheaf(base, j, g));
        }
        for (;;) {
            ObjectId big = 0;
            for (ObjectId i = 1; i < nobj; ++i)
                if (a.dim(i) > a.dim(big))
                    big = i;
            if (a.dim(big) <= maxdim)
                break;
            Matrix v(a.dim(big), 1);
            do
                for (std::size_t r = 0; r < v.rows(); ++r)
                    v(r, 0) = small_int(rng, 2);
            while (v.is_zero());
            a = quotient_by_generated(a, big, v);
        }
        std::vector<Matrix> t, tinv;
        for (ObjectId i = 0; i < nobj; ++i) {
            t.push_back(random_unitriangular_product(rng, a.dim(i)));
            tinv.push_back(*inverse(t.back()));
        }
        std::vector<Matrix> action;
        for (MorphismId h = 0; h < c.num_morphisms(); ++h)
            action.push_back(tinv[c.src(h)] * a.action(h) * t[c.tgt(h)]);
        a = Representation(base, a.dims(), std::move(action));
    }

    return random_natural_endo(std::move(a), rng);
}

// ---------------------------------------------------------------------------
// Verification

bool TraceReport::verdict() const
{
    bool any = false;
    for (const auto& o : oracles) {
        if (!o.trace)
            continue;
        any = true;
        if (!o.agrees)
            return false;
    }
    return any;
}

bool TraceReport::audits_pass() const
{
    if (!verdict())
        return false;
    for (const auto& o : oracles)
        if (o.trace && (!o.chain_equals_homology || !o.h0_matches_colimit || !o.exact_resolution))
            return false;
    return true;
}

namespace {

void audit_complex(OracleResult& out, const ChainEndo& u, const DirectColimit& colimit)
{
    const ChainComplex& x = u.complex();
    out.complex_dims = x.dims();
    out.homology_dims = homology_dims(x);
    out.trace = lefschetz_trace(u);
    out.chain_equals_homology = *out.trace == homology_lefschetz_trace(u);
    const std::vector<Matrix> induced = induced_on_homology(u);
    const std::size_t h0 = x.empty() || x.low() > 0 || x.high() < 0 ? 0 : out.homology_dims[static_cast<std::size_t>(-x.low())];
    Matrix h0_trace(u.dim_t(), u.dim_s());
    if (h0 > 0)
        h0_trace = partial_trace(induced[static_cast<std::size_t>(-x.low())], h0, u.dim_s(), u.dim_t());
    out.h0_matches_colimit = h0 == colimit.dim && h0_trace == colimit.trace;
}

} // namespace

TraceReport verify_theorem(const TwistedEndo& f, const VerifyOptions& options)
{
    const FinCategory& c = f.category();
    TraceReport report;
    report.ei = is_ei(c);
    if (!report.ei)
        throw NotEI("the trace formula needs an EI category");
    report.characteristic = characteristic(c);
    report.iso_classes = iso_classes(c).classes.size();
    report.coefficients = theorem_coefficients(c);
    report.local = local_trace_table(f, report.coefficients.index);
    report.formula = Matrix(f.dim_t(), f.dim_s());
    for (std::size_t k = 0; k < report.local.values.size(); ++k)
        report.formula += report.local.values[k] * report.coefficients.lambda[k];
    report.colimit = direct_colimit(f);

    const auto attempt = [&](OracleResult& out, auto&& body) {
        try {
            body();
        } catch (const Error& e) {
            out.trace.reset();
            out.error = e.what();
        }
        if (out.trace)
            out.agrees = *out.trace == report.formula;
    };

    if (options.resolution) {
        OracleResult out;
        out.name = "resolution";
        out.applicable = true;
        attempt(out, [&] {
            std::optional<Resolution> fresh;
            const Resolution* r = options.resolution_cache;
            if (!r) {
                fresh = projective_resolution(make_category(opposite(c)), options.resolution_options);
                r = &*fresh;
            }
            out.exact_resolution = audit_exactness(*r).exact;
            audit_complex(out, resolution_complex(f, *r), report.colimit);
        });
        report.oracles.push_back(std::move(out));
    }
    if (options.bar) {
        OracleResult out;
        out.name = "bar";
        out.applicable = is_loop_free(c);
        if (out.applicable)
            attempt(out, [&] { audit_complex(out, bar_complex(f), report.colimit); });
        report.oracles.push_back(std::move(out));
    }
    if (options.group) {
        OracleResult out;
        out.name = "group";
        out.applicable = c.num_objects() == 1;
        if (out.applicable)
            attempt(out, [&] {
                out.trace = hocolim_trace_group(f);
                out.chain_equals_homology = true;
                out.h0_matches_colimit = *out.trace == report.colimit.trace;
            });
        report.oracles.push_back(std::move(out));
    }
    return report;
}

Json report_to_json(const TraceReport& report, const FinCategory& c)
{
    Json j;
    j["schemaVersion"] = 1;
    j["category"] = {{"objects", c.num_objects()},
                     {"morphisms", c.num_morphisms()},
                     {"ei", report.ei},
                     {"characteristic", report.characteristic},
                     {"isoClasses", report.iso_classes}};
    Json entries = Json::array();
    const auto& idx = report.coefficients.index;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const auto& e = idx.entries[k];
        entries.push_back({{"i", c.object_name(e.object)},
                           {"h", c.morphism(e.representative).name},
                           {"classSize", e.class_size},
                           {"centralizerOrder", e.centralizer_order},
                           {"groupOrder", e.group_order},
                           {"lambda", format_rational(report.coefficients.lambda[k])},
                           {"lambdaSolve", format_rational(report.coefficients.lambda_solve[k])},
                           {"lambdaMobius", format_rational(report.coefficients.lambda_mobius[k])},
                           {"localTrace", matrix_to_json(report.local.values[k])}});
    }
    j["entries"] = std::move(entries);
    j["formula"] = matrix_to_json(report.formula);
    Json oracles = Json::array();
    for (const auto& o : report.oracles) {
        Json oj;
        oj["oracle"] = o.name;
        oj["status"] = !o.applicable ? "not-applicable" : o.trace ? "ok" : "error";
        if (o.trace) {
            oj["trace"] = matrix_to_json(*o.trace);
            oj["agrees"] = o.agrees;
            if (!o.complex_dims.empty()) {
                oj["complexDims"] = o.complex_dims;
                oj["homologyDims"] = o.homology_dims;
            }
            oj["chainEqualsHomology"] = o.chain_equals_homology;
            oj["h0MatchesColimit"] = o.h0_matches_colimit;
            if (o.name == "resolution")
                oj["exactResolution"] = o.exact_resolution;
        }
        if (!o.error.empty())
            oj["error"] = o.error;
        oracles.push_back(std::move(oj));
    }
    j["oracles"] = std::move(oracles);
    j["colimit"] = {{"dim", report.colimit.dim}, {"trace", matrix_to_json(report.colimit.trace)}};
    j["verdict"] = report.verdict();
    j["auditsPass"] = report.audits_pass();
    return j;
}

std::vector<WitnessCheck> check_witnesses(const CategoryPtr& base, std::size_t dimS, const VerifyOptions& options)
{
    const FinCategory& c = *base;
    const TheoremCoefficients coeff = theorem_coefficients(c);
    std::optional<Resolution> fresh;
    VerifyOptions opts = options;
    if (opts.resolution && !opts.resolution_cache) {
        fresh = projective_resolution(make_category(opposite(c)), opts.resolution_options);
        opts.resolution_cache = &*fresh;
    }
    const Matrix id = Matrix::identity(dimS);
    std::vector<WitnessCheck> out;
    for (std::size_t b = 0; b < coeff.index.size(); ++b) {
        const auto& target = coeff.index.entries[b];
        const TwistedEndo w = witness(base, target.object, target.representative, dimS);
        WitnessCheck check;
        check.entry = b;
        const LocalTraceTable local = local_trace_table(w, coeff.index);
        check.local_traces_match_zeta = true;
        check.coweighting_sum = 0;
        for (std::size_t a = 0; a < coeff.index.size(); ++a) {
            if (local.values[a] != id * coeff.zeta(a, b))
                check.local_traces_match_zeta = false;
            check.coweighting_sum += coeff.lambda[a] * coeff.zeta(a, b);
        }
        const TraceReport report = verify_theorem(w, opts);
        check.oracles_return_identity = report.audits_pass();
        for (const auto& o : report.oracles)
            if (o.applicable && (!o.trace || *o.trace != id))
                check.oracles_return_identity = false;
        out.push_back(std::move(check));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Fuzzing

std::uint64_t case_seed(std::uint64_t seed, std::size_t index)
{
    // splitmix64 finalizer over the pair
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(index) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<FuzzCase> fuzz(const FuzzOptions& options)
{
    if (options.kinds.empty())
        throw InvalidInput("fuzz needs at least one category kind");
    std::vector<FuzzCase> cases(options.cases);
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            FuzzCase& fc = cases[i];
            fc.index = i;
            fc.kind = options.kinds[i % options.kinds.size()];
            fc.seed = case_seed(options.seed, i);
            try {
                auto cat = make_category(generate_category(fc.kind, fc.seed));
                fc.objects = cat->num_objects();
                fc.morphisms = cat->num_morphisms();
                const TwistedEndo f = generate_diagram(cat, case_seed(fc.seed, 0), options.maxdim);
                const TraceReport report = verify_theorem(f);
                fc.verdict = report.verdict();
                fc.audits = report.audits_pass();
                for (const auto& o : report.oracles)
                    if (o.trace && o.agrees)
                        fc.oracles_agreeing.push_back(o.name);
            } catch (const std::exception& e) {
                fc.error = e.what();
            }
        }
    };
    std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, std::max<std::size_t>(1, cases.size()));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    return cases;
}

Json fuzz_to_json(const std::vector<FuzzCase>& cases, const FuzzOptions& options)
{
    Json j;
    j["schemaVersion"] = 1;
    j["seed"] = options.seed;
    Json kinds = Json::array();
    for (auto k : options.kinds)
        kinds.push_back(kind_name(k));
    j["kinds"] = std::move(kinds);
    std::size_t passed = 0;
    Json list = Json::array();
    for (const auto& fc : cases) {
        if (fc.verdict && fc.audits)
            ++passed;
        Json cj = {{"index", fc.index},   {"kind", kind_name(fc.kind)},  {"seed", fc.seed},
                   {"objects", fc.objects}, {"morphisms", fc.morphisms}, {"verdict", fc.verdict},
                   {"audits", fc.audits},   {"oraclesAgreeing", fc.oracles_agreeing}};
        if (!fc.error.empty())
            cj["error"] = fc.error;
        list.push_back(std::move(cj));
    }
    j["cases"] = std::move(list);
    j["passed"] = passed;
    j["total"] = cases.size();
    return j;
}

} // namespace eitrace
