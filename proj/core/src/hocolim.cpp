#include "eitrace/hocolim.hpp"

#include "eitrace/constructions.hpp"
#include "eitrace/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

namespace eitrace {

namespace {

Matrix unit_vector(std::size_t n, std::size_t k)
{
    Matrix v(n, 1);
    v(k, 0) = 1;
    return v;
}

std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& dims)
{
    std::vector<std::size_t> off(dims.size() + 1, 0);
    for (std::size_t i = 0; i < dims.size(); ++i)
        off[i + 1] = off[i] + dims[i];
    return off;
}

} // namespace

bool CategoryAlgebra::verify() const
{
    const FinCategory& c = *base;
    const std::size_t n = c.num_morphisms();
    const auto mul = [&](std::uint32_t g, std::uint32_t f) -> std::uint32_t {
        if (g == FinCategory::kNone || f == FinCategory::kNone)
            return FinCategory::kNone;
        return product[g * n + f];
    };
    for (std::uint32_t h = 0; h < n; ++h)
        for (std::uint32_t g = 0; g < n; ++g)
            for (std::uint32_t f = 0; f < n; ++f)
                if (mul(h, mul(g, f)) != mul(mul(h, g), f))
                    return false;
    // The unit is the sum of the identities; exactly one term survives on each side.
    for (std::uint32_t b = 0; b < n; ++b) {
        std::size_t left = 0, right = 0;
        for (ObjectId o = 0; o < c.num_objects(); ++o) {
            auto id = static_cast<std::uint32_t>(c.identity(o));
            std::uint32_t l = mul(id, b), r = mul(b, id);
            if (l != FinCategory::kNone) {
                ++left;
                if (l != b)
                    return false;
            }
            if (r != FinCategory::kNone) {
                ++right;
                if (r != b)
                    return false;
            }
        }
        if (left != 1 || right != 1)
            return false;
    }
    return true;
}

CategoryAlgebra category_algebra(const CategoryPtr& c)
{
    CategoryAlgebra a;
    a.base = c;
    const std::size_t n = c->num_morphisms();
    a.product.assign(n * n, FinCategory::kNone);
    for (MorphismId g = 0; g < n; ++g)
        for (MorphismId f = 0; f < n; ++f)
            if (c->composable(g, f))
                a.product[g * n + f] = static_cast<std::uint32_t>(c->compose(g, f));
    return a;
}

std::size_t AlgModule::total_dim() const
{
    return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

Matrix AlgModule::total_action(MorphismId m) const
{
    const auto off = offsets_of(dims);
    Matrix t(total_dim(), total_dim());
    t.set_block(off[base->tgt(m)], off[base->src(m)], action[m]);
    return t;
}

ValidationReport validate_module(const AlgModule& m)
{
    ValidationReport report;
    const FinCategory& c = *m.base;
    for (MorphismId h = 0; h < c.num_morphisms(); ++h)
        if (m.action[h].rows() != m.dims[c.tgt(h)] || m.action[h].cols() != m.dims[c.src(h)])
            report.violations.push_back("action of " + c.morphism(h).name + " has the wrong shape");
    if (!report.ok())
        return report;
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        if (m.action[c.identity(o)] != Matrix::identity(m.dims[o]))
            report.violations.push_back("identity at " + c.object_name(o) + " does not act as the identity");
    for (MorphismId g = 0; g < c.num_morphisms(); ++g)
        for (MorphismId f = 0; f < c.num_morphisms(); ++f)
            if (c.composable(g, f) && m.action[c.compose(g, f)] != m.action[g] * m.action[f])
                report.violations.push_back("action fails to respect " + c.morphism(g).name + " o " +
                                            c.morphism(f).name);
    return report;
}

AlgModule constant_module(const CategoryPtr& c)
{
    AlgModule m;
    m.base = c;
    m.dims.assign(c->num_objects(), 1);
    m.action.assign(c->num_morphisms(), Matrix::identity(1));
    return m;
}

AlgModule rep_to_module(const Representation& a)
{
    AlgModule m;
    m.base = make_category(opposite(a.category()));
    m.dims = a.dims();
    m.action = a.actions();
    return m;
}

Representation module_to_rep(const AlgModule& m, const CategoryPtr& base)
{
    if (base->num_objects() != m.base->num_objects() || base->num_morphisms() != m.base->num_morphisms())
        throw InvalidInput("module and category have different sizes");
    return Representation(base, m.dims, m.action);
}

// ---------------------------------------------------------------------------
// Free modules

FreeModule::FreeModule(CategoryPtr base, std::vector<ObjectId> generators)
    : base_(std::move(base)), generators_(std::move(generators))
{
    const FinCategory& c = *base_;
    dims_.assign(c.num_objects(), 0);
    offset_.assign(c.num_objects(), std::vector<std::size_t>(generators_.size(), 0));
    for (ObjectId x = 0; x < c.num_objects(); ++x)
        for (std::size_t a = 0; a < generators_.size(); ++a) {
            offset_[x][a] = dims_[x];
            dims_[x] += c.hom_count(generators_[a], x);
        }
    hom_position_.assign(c.num_morphisms(), 0);
    for (ObjectId x = 0; x < c.num_objects(); ++x)
        for (ObjectId y = 0; y < c.num_objects(); ++y) {
            const auto& hom = c.hom(x, y);
            for (std::size_t p = 0; p < hom.size(); ++p)
                hom_position_[hom[p]] = p;
        }
}

std::size_t FreeModule::index(std::size_t generator, MorphismId m) const
{
    return offset_[base_->tgt(m)][generator] + hom_position_[m];
}

Matrix FreeModule::action(MorphismId m) const
{
    const FinCategory& c = *base_;
    const ObjectId x = c.src(m), y = c.tgt(m);
    Matrix t(dims_[y], dims_[x]);
    for (std::size_t a = 0; a < generators_.size(); ++a)
        for (MorphismId n : c.hom(generators_[a], x))
            t(index(a, c.compose(m, n)), index(a, n)) = 1;
    return t;
}

AlgModule FreeModule::as_module() const
{
    AlgModule m;
    m.base = base_;
    m.dims = dims_;
    for (MorphismId h = 0; h < base_->num_morphisms(); ++h)
        m.action.push_back(action(h));
    return m;
}

Matrix FreeModule::map_component(const FreeModule& target, const std::vector<Matrix>& images, ObjectId x) const
{
    const FinCategory& c = *base_;
    Matrix out(target.dim(x), dims_[x]);
    for (std::size_t a = 0; a < generators_.size(); ++a) {
        const ObjectId g = generators_[a];
        const Matrix& v = images[a];
        for (MorphismId n : c.hom(g, x)) {
            const std::size_t col = index(a, n);
            // target.action(n) sends the basis vector (b, p) to (b, n o p)
            for (std::size_t b = 0; b < target.generators_.size(); ++b)
                for (MorphismId p : c.hom(target.generators_[b], g)) {
                    const Rational& coeff = v(target.index(b, p), 0);
                    if (coeff != 0)
                        out(target.index(b, c.compose(n, p)), col) += coeff;
                }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Resolutions

namespace {

struct Cover {
    std::vector<ObjectId> generators;
    std::vector<Matrix> vectors; ///< column in the module's component at the generator
};

std::string char_note(const FinCategory& c)
{
    try {
        return "Char(C) = " + std::to_string(characteristic(c)) + " is expected to be invertible here";
    } catch (const NotEI&) {
        return "C is not EI, so Char(C) is undefined and finite length is not expected";
    }
}

/// Objects that reach more objects first, so that generators sit as low as possible.
std::vector<ObjectId> processing_order(const FinCategory& d)
{
    const std::size_t n = d.num_objects();
    std::vector<std::size_t> reach(n, 0);
    for (ObjectId x = 0; x < n; ++x)
        for (ObjectId y = 0; y < n; ++y)
            if (d.hom_count(x, y) != 0)
                ++reach[x];
    std::vector<ObjectId> order(n);
    std::iota(order.begin(), order.end(), ObjectId{0});
    std::stable_sort(order.begin(), order.end(), [&](ObjectId a, ObjectId b) { return reach[a] > reach[b]; });
    return order;
}

Cover choose_cover(const AlgModule& m, const std::vector<ObjectId>& order, std::mt19937_64* rng)
{
    const FinCategory& d = *m.base;
    Cover cover;
    for (ObjectId x : order) {
        const std::size_t dim = m.dims[x];
        if (dim == 0)
            continue;
        std::vector<Matrix> columns;
        for (std::size_t a = 0; a < cover.generators.size(); ++a)
            for (MorphismId n : d.hom(cover.generators[a], x))
                columns.push_back(m.action[n] * cover.vectors[a]);
        Matrix span(dim, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j)
            span.set_block(0, j, columns[j]);
        std::size_t r = rank(span);
        std::vector<std::size_t> candidates(dim);
        std::iota(candidates.begin(), candidates.end(), std::size_t{0});
        if (rng)
            std::shuffle(candidates.begin(), candidates.end(), *rng);
        for (std::size_t k : candidates) {
            if (r == dim)
                break;
            Matrix e = unit_vector(dim, k);
            Matrix orbit(dim, 0);
            for (MorphismId g : d.hom(x, x))
                orbit = hstack(orbit, m.action[g] * e);
            Matrix grown = hstack(span, orbit);
            std::size_t r2 = rank(grown);
            if (r2 > r) {
                cover.generators.push_back(x);
                cover.vectors.push_back(e);
                span = image(grown);
                r = r2;
            }
        }
    }
    return cover;
}

/// Component at x of the cover map from the free module onto m.
Matrix cover_component(const AlgModule& m, const FreeModule& free, const Cover& cover, ObjectId x)
{
    const FinCategory& d = *m.base;
    Matrix pi(m.dims[x], free.dim(x));
    for (std::size_t a = 0; a < cover.generators.size(); ++a)
        for (MorphismId n : d.hom(cover.generators[a], x))
            pi.set_block(0, free.index(a, n), m.action[n] * cover.vectors[a]);
    return pi;
}

/// Looks for a module endomorphism s of the free module with pi s = pi that
/// kills the given kernel generators; s is then an idempotent splitting pi.
/// Returns the images of the free generators.
std::optional<std::vector<Matrix>> split_cover(const FreeModule& free, const Cover& cover, const AlgModule& m,
                                               const std::vector<Matrix>& pi,
                                               const std::vector<ObjectId>& kernel_objects,
                                               const std::vector<Matrix>& kernel_vectors)
{
    const FinCategory& d = *free.base();
    const std::size_t ngen = free.rank();
    std::vector<std::size_t> unknown_offset(ngen + 1, 0);
    for (std::size_t a = 0; a < ngen; ++a)
        unknown_offset[a + 1] = unknown_offset[a] + free.dim(free.generators()[a]);
    const std::size_t nunknowns = unknown_offset[ngen];

    std::size_t nrows = 0;
    for (std::size_t a = 0; a < ngen; ++a)
        nrows += m.dims[free.generators()[a]];
    for (ObjectId x : kernel_objects)
        nrows += free.dim(x);
    Matrix system(nrows, nunknowns);
    Matrix rhs(nrows, 1);

    std::size_t row = 0;
    for (std::size_t a = 0; a < ngen; ++a) {
        const ObjectId g = free.generators()[a];
        system.set_block(row, unknown_offset[a], pi[g]);
        rhs.set_block(row, 0, cover.vectors[a]);
        row += m.dims[g];
    }
    // s(kappa) = sum over basis (a, n) of kappa[(a, n)] * n . w_a
    for (std::size_t k = 0; k < kernel_objects.size(); ++k) {
        const ObjectId x = kernel_objects[k];
        const Matrix& kappa = kernel_vectors[k];
        for (std::size_t a = 0; a < ngen; ++a) {
            const ObjectId g = free.generators()[a];
            for (MorphismId n : d.hom(g, x)) {
                const Rational& coeff = kappa(free.index(a, n), 0);
                if (coeff == 0)
                    continue;
                for (std::size_t b = 0; b < ngen; ++b)
                    for (MorphismId p : d.hom(free.generators()[b], g))
                        system(row + free.index(b, d.compose(n, p)), unknown_offset[a] + free.index(b, p)) += coeff;
            }
        }
        row += free.dim(x);
    }
    auto solution = solve(system, rhs);
    if (!solution)
        return std::nullopt;
    std::vector<Matrix> images;
    for (std::size_t a = 0; a < ngen; ++a)
        images.push_back(solution->block(unknown_offset[a], 0, unknown_offset[a + 1] - unknown_offset[a], 1));
    return images;
}

} // namespace

Matrix Resolution::boundary_component(std::size_t n, ObjectId x) const
{
    if (n == 0) {
        Matrix aug(1, free[0].dim(x));
        for (std::size_t j = 0; j < aug.cols(); ++j)
            aug(0, j) = 1;
        return aug;
    }
    return free[n].map_component(free[n - 1], boundary[n], x);
}

Matrix Resolution::idempotent_component(ObjectId x) const
{
    return free.back().map_component(free.back(), top_idempotent, x);
}

Resolution projective_resolution(const CategoryPtr& c, const ResolutionOptions& options)
{
    Resolution r;
    r.category = c;
    r.dual = make_category(opposite(*c));
    const FinCategory& d = *r.dual;
    const std::size_t cap = options.cap ? options.cap : c->num_morphisms() + 2;
    std::mt19937_64 rng(options.seed);
    std::mt19937_64* shuffle = options.seed ? &rng : nullptr;
    const auto order = processing_order(d);

    AlgModule m = constant_module(r.dual);
    Cover cover = choose_cover(m, order, shuffle);
    std::vector<Matrix> previous_kernel; // basis of the current module inside the previous free module
    r.boundary.emplace_back();
    for (std::size_t stage = 0;; ++stage) {
        FreeModule free(r.dual, cover.generators);
        if (stage > 0) {
            std::vector<Matrix> images;
            for (std::size_t a = 0; a < cover.generators.size(); ++a)
                images.push_back(previous_kernel[cover.generators[a]] * cover.vectors[a]);
            r.boundary.push_back(std::move(images));
        }
        r.free.push_back(free);

        std::vector<Matrix> pi, ker;
        std::size_t kernel_total = 0;
        for (ObjectId x = 0; x < d.num_objects(); ++x) {
            pi.push_back(cover_component(m, free, cover, x));
            ker.push_back(kernel(pi.back()));
            kernel_total += ker.back().cols();
        }
        if (kernel_total == 0) {
            for (std::size_t a = 0; a < free.rank(); ++a)
                r.top_idempotent.push_back(unit_vector(free.dim(free.generators()[a]), free.index(a, d.identity(free.generators()[a]))));
            r.top_is_free = true;
            return r;
        }

        AlgModule k;
        k.base = r.dual;
        for (ObjectId x = 0; x < d.num_objects(); ++x)
            k.dims.push_back(ker[x].cols());
        std::vector<Matrix> left;
        for (ObjectId x = 0; x < d.num_objects(); ++x)
            left.push_back(left_inverse(ker[x]));
        for (MorphismId h = 0; h < d.num_morphisms(); ++h)
            k.action.push_back(left[d.tgt(h)] * free.action(h) * ker[d.src(h)]);
        Cover next = choose_cover(k, order, shuffle);

        std::vector<Matrix> kernel_vectors;
        for (std::size_t a = 0; a < next.generators.size(); ++a)
            kernel_vectors.push_back(ker[next.generators[a]] * next.vectors[a]);
        if (auto split = split_cover(free, cover, m, pi, next.generators, kernel_vectors)) {
            r.top_idempotent = std::move(*split);
            r.top_is_free = false;
            return r;
        }
        if (stage + 1 > cap)
            throw ResolutionCapExceeded("projective resolution exceeded length " + std::to_string(cap) +
                                        " without splitting; " + char_note(*c));
        previous_kernel = std::move(ker);
        m = std::move(k);
        cover = std::move(next);
    }
}

ExactnessAudit audit_exactness(const Resolution& r)
{
    ExactnessAudit audit;
    const FinCategory& d = *r.dual;
    const std::size_t top = r.length();
    const auto fail = [&](std::size_t n, ObjectId x, const std::string& what) {
        audit.exact = false;
        audit.failures.push_back("degree " + std::to_string(n) + ", object " + d.object_name(x) + ": " + what);
    };
    for (ObjectId x = 0; x < d.num_objects(); ++x) {
        const Matrix e = r.idempotent_component(x);
        if (e * e != e)
            fail(top, x, "top map is not idempotent");
        std::vector<Matrix> bd;
        for (std::size_t n = 0; n <= top; ++n)
            bd.push_back(r.boundary_component(n, x));
        // Restrict the last boundary to the top projective.
        bd[top] = bd[top] * e;
        for (std::size_t n = 1; n <= top; ++n)
            if (!(bd[n - 1] * bd[n]).is_zero())
                fail(n, x, "d o d != 0");
        if (rank(bd[0]) != 1)
            fail(0, x, "augmentation is not surjective");
        for (std::size_t n = 0; n < top; ++n) {
            std::size_t in = rank(bd[n + 1]), out = rank(bd[n]);
            if (in + out != r.free[n].dim(x))
                fail(n, x, "kernel and image differ (ranks " + std::to_string(out) + " + " + std::to_string(in) +
                               " vs dim " + std::to_string(r.free[n].dim(x)) + ")");
        }
        if (rank(bd[top]) != rank(e))
            fail(top, x, "boundary is not injective on the top projective");
    }
    return audit;
}

// ---------------------------------------------------------------------------
// Derived colimit

namespace {

/// Tensors a map between free modules over D with a covariant diagram on C = D^op.
Matrix tensor_free_map(const FreeModule& source, const FreeModule& target, const std::vector<Matrix>& images,
                       const AlgModule& diagram)
{
    const FinCategory& d = *source.base();
    std::vector<std::size_t> sdims, tdims;
    for (ObjectId g : source.generators())
        sdims.push_back(diagram.dims[g]);
    for (ObjectId g : target.generators())
        tdims.push_back(diagram.dims[g]);
    const auto soff = offsets_of(sdims), toff = offsets_of(tdims);
    Matrix out(toff.back(), soff.back());
    for (std::size_t a = 0; a < source.rank(); ++a) {
        const ObjectId ga = source.generators()[a];
        for (std::size_t b = 0; b < target.rank(); ++b)
            for (MorphismId p : d.hom(target.generators()[b], ga)) {
                const Rational& coeff = images[a](target.index(b, p), 0);
                if (coeff == 0)
                    continue;
                // p : g_b -> g_a in D is g_a -> g_b in C
                Matrix block = out.block(toff[b], soff[a], tdims[b], sdims[a]);
                block += diagram.action[p] * coeff;
                out.set_block(toff[b], soff[a], block);
            }
    }
    return out;
}

Matrix endo_on_free(const FreeModule& free, const std::vector<Matrix>& f)
{
    std::vector<Matrix> blocks;
    for (ObjectId g : free.generators())
        blocks.push_back(f[g]);
    return block_diagonal(blocks);
}

std::size_t fiber_total(const FreeModule& free, const AlgModule& diagram)
{
    std::size_t t = 0;
    for (ObjectId g : free.generators())
        t += diagram.dims[g];
    return t;
}

} // namespace

ChainEndo derived_colimit_complex(const Resolution& r, const AlgModule& diagram, std::size_t dimS,
                                  std::size_t dimT, const std::vector<Matrix>& f)
{
    const FinCategory& c = *r.category;
    if (diagram.base->num_objects() != c.num_objects() || diagram.base->num_morphisms() != c.num_morphisms())
        throw InvalidInput("diagram and resolution live over different categories");
    const std::size_t top = r.length();
    std::vector<std::size_t> dims;
    std::vector<Matrix> diffs, maps;
    for (std::size_t n = 0; n <= top; ++n) {
        dims.push_back(fiber_total(r.free[n], diagram));
        maps.push_back(endo_on_free(r.free[n], f));
        if (n > 0)
            diffs.push_back(tensor_free_map(r.free[n], r.free[n - 1], r.boundary[n], diagram));
    }
    if (!r.top_is_free) {
        const Matrix e = tensor_free_map(r.free[top], r.free[top], r.top_idempotent, diagram);
        if (e * e != e)
            throw InternalMismatch("tensored top idempotent is not idempotent");
        const Matrix basis = image(e);
        const Matrix left = left_inverse(basis);
        dims[top] = basis.cols();
        if (top > 0)
            diffs[top - 1] = diffs[top - 1] * basis;
        maps[top] = kron(left, Matrix::identity(dimT)) * maps[top] * kron(basis, Matrix::identity(dimS));
    }
    ChainComplex complex(0, std::move(dims), std::move(diffs));
    return ChainEndo(std::move(complex), dimS, dimT, std::move(maps));
}

ChainEndo resolution_complex(const TwistedEndo& f, const Resolution& r)
{
    return derived_colimit_complex(r, rep_to_module(f.rep()), f.dim_s(), f.dim_t(), f.components());
}

Matrix hocolim_trace_resolution(const TwistedEndo& f, const Resolution& r)
{
    return lefschetz_trace(resolution_complex(f, r));
}

Matrix hocolim_trace_resolution(const TwistedEndo& f, const ResolutionOptions& options)
{
    const Resolution r = projective_resolution(make_category(opposite(f.category())), options);
    return hocolim_trace_resolution(f, r);
}

// ---------------------------------------------------------------------------
// Bar complex

bool is_loop_free(const FinCategory& c)
{
    if (!is_skeletal(c))
        return false;
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        if (c.hom_count(o, o) != 1)
            return false;
    return true;
}

ChainEndo bar_complex(const TwistedEndo& f)
{
    const FinCategory& base = f.category();
    if (!is_loop_free(base))
        throw NotLoopFree("bar oracle needs a skeletal category without non-identity endomorphisms");
    const FinCategory c = opposite(base);
    const Representation& a = f.rep();

    // chains[n]: object for n = 0, else the composable non-identity morphisms phi_1..phi_n.
    std::vector<std::vector<std::vector<std::size_t>>> chains(1);
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        chains[0].push_back({o});
    std::vector<std::vector<std::size_t>> layer;
    for (MorphismId m = 0; m < c.num_morphisms(); ++m)
        if (!c.is_identity(m))
            layer.push_back({m});
    while (!layer.empty()) {
        chains.push_back(layer);
        std::vector<std::vector<std::size_t>> next;
        for (const auto& ch : layer)
            for (MorphismId m = 0; m < c.num_morphisms(); ++m)
                if (!c.is_identity(m) && c.src(m) == c.tgt(ch.back())) {
                    auto ext = ch;
                    ext.push_back(m);
                    next.push_back(std::move(ext));
                }
        layer = std::move(next);
    }
    const auto start = [&](std::size_t n, const std::vector<std::size_t>& ch) {
        return n == 0 ? ch[0] : c.src(ch[0]);
    };

    std::vector<std::map<std::vector<std::size_t>, std::size_t>> offset(chains.size());
    std::vector<std::size_t> dims;
    std::vector<Matrix> maps;
    for (std::size_t n = 0; n < chains.size(); ++n) {
        std::size_t total = 0;
        std::vector<Matrix> blocks;
        for (const auto& ch : chains[n]) {
            offset[n][ch] = total;
            ObjectId c0 = start(n, ch);
            total += a.dim(c0);
            blocks.push_back(f.component(c0));
        }
        dims.push_back(total);
        maps.push_back(block_diagonal(blocks));
    }
    std::vector<Matrix> diffs;
    for (std::size_t n = 1; n < chains.size(); ++n) {
        Matrix dn(dims[n - 1], dims[n]);
        for (const auto& ch : chains[n]) {
            const ObjectId c0 = c.src(ch[0]);
            const std::size_t col = offset[n][ch];
            const auto add = [&](std::size_t l, const std::vector<std::size_t>& face, const Matrix& block) {
                const std::size_t row = offset[n - 1].at(face);
                Matrix cur = dn.block(row, col, block.rows(), block.cols());
                if (l % 2 == 0)
                    cur += block;
                else
                    cur -= block;
                dn.set_block(row, col, cur);
            };
            const Matrix id = Matrix::identity(a.dim(c0));
            // face 0 moves the value along phi_1
            std::vector<std::size_t> face0 =
                n == 1 ? std::vector<std::size_t>{c.tgt(ch[0])} : std::vector<std::size_t>(ch.begin() + 1, ch.end());
            add(0, face0, a.action(ch[0]));
            for (std::size_t l = 1; l < n; ++l) {
                std::vector<std::size_t> face(ch.begin(), ch.begin() + static_cast<long>(l) - 1);
                face.push_back(c.compose(ch[l], ch[l - 1]));
                face.insert(face.end(), ch.begin() + static_cast<long>(l) + 1, ch.end());
                add(l, face, id);
            }
            std::vector<std::size_t> facen =
                n == 1 ? std::vector<std::size_t>{c0} : std::vector<std::size_t>(ch.begin(), ch.end() - 1);
            add(n, facen, id);
        }
        diffs.push_back(std::move(dn));
    }
    ChainComplex complex(0, std::move(dims), std::move(diffs));
    return ChainEndo(std::move(complex), f.dim_s(), f.dim_t(), std::move(maps));
}

Matrix hocolim_trace_bar(const TwistedEndo& f)
{
    return lefschetz_trace(bar_complex(f));
}

// ---------------------------------------------------------------------------
// Group averaging

Matrix hocolim_trace_group(const TwistedEndo& f)
{
    const FinCategory& c = f.category();
    if (c.num_objects() != 1 || !is_ei(c))
        throw NotAGroup("group oracle needs a one-object category whose morphisms are invertible");
    const std::size_t d = f.rep().dim(0);
    Matrix sum(f.dim_t(), f.dim_s());
    for (MorphismId g = 0; g < c.num_morphisms(); ++g)
        sum += partial_trace(kron(f.rep().action(g), Matrix::identity(f.dim_t())) * f.component(0), d, f.dim_s(),
                             f.dim_t());
    return sum * Rational(1, static_cast<unsigned long>(c.num_morphisms()));
}

// ---------------------------------------------------------------------------
// Underived colimit

DirectColimit direct_colimit(const AlgModule& diagram, std::size_t dimS, std::size_t dimT,
                             const std::vector<Matrix>& f)
{
    const FinCategory& c = *diagram.base;
    const auto off = offsets_of(diagram.dims);
    const std::size_t total = off.back();
    std::size_t ncols = 0;
    for (MorphismId m = 0; m < c.num_morphisms(); ++m)
        if (!c.is_identity(m))
            ncols += diagram.dims[c.src(m)];
    Matrix relations(total, ncols);
    std::size_t col = 0;
    for (MorphismId m = 0; m < c.num_morphisms(); ++m) {
        if (c.is_identity(m))
            continue;
        const ObjectId x = c.src(m), y = c.tgt(m);
        Matrix block = diagram.action[m];
        relations.set_block(off[y], col, block);
        Matrix here = relations.block(off[x], col, diagram.dims[x], diagram.dims[x]);
        here -= Matrix::identity(diagram.dims[x]);
        relations.set_block(off[x], col, here);
        col += diagram.dims[x];
    }
    const Matrix rel = image(relations);
    DirectColimit out;
    out.dim = total - rel.cols();
    out.induced = induced_on_subquotient(block_diagonal(f), Matrix::identity(total), rel, dimS, dimT);
    out.trace = out.dim ? partial_trace(out.induced, out.dim, dimS, dimT) : Matrix(dimT, dimS);
    return out;
}

DirectColimit direct_colimit(const TwistedEndo& f)
{
    return direct_colimit(rep_to_module(f.rep()), f.dim_s(), f.dim_t(), f.components());
}

} // namespace eitrace
