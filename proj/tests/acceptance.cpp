// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include "eitrace/constructions.hpp"
#include "eitrace/coweight.hpp"
#include "eitrace/harness.hpp"
#include "eitrace/hocolim.hpp"

#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace eitrace;

namespace {

// Failure details collected while a criterion runs.
struct Log {
    std::ostringstream out;
    std::size_t failures = 0;
    void fail(const std::string& what)
    {
        if (failures++ < 5)
            out << "\n    " << what;
    }
    void check(bool ok, const std::string& what)
    {
        if (!ok)
            fail(what);
    }
};

bool run(int number, const char* title, const std::function<void(Log&)>& body)
{
    Log log;
    try {
        body(log);
    } catch (const std::exception& e) {
        log.fail(std::string("exception: ") + e.what());
    }
    const bool ok = log.failures == 0;
    std::printf("%s criterion %d: %s%s\n", ok ? "PASS" : "FAIL", number, title, log.out.str().c_str());
    std::fflush(stdout);
    return ok;
}

Rational q(long p, long d)
{
    Rational r(p, d);
    r.canonicalize();
    return r;
}

Matrix fiber_trace(const TwistedEndo& f, ObjectId i)
{
    return partial_trace(f.component(i), f.rep().dim(i), f.dim_s(), f.dim_t());
}

// Criterion 1: over the pushout shape hocolim trace = tr f01 + tr f10 - tr f11.
void pushout_shape(Log& log)
{
    const CategoryPtr p = make_category(pushout_category());
    const ObjectId o11 = *p->find_object("(1,1)"), o01 = *p->find_object("(0,1)"), o10 = *p->find_object("(1,0)");
    const Resolution r = projective_resolution(make_category(opposite(*p)));
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> dim(0, 4);
    for (int n = 0; n < 50; ++n) {
        std::vector<std::size_t> dims{dim(rng), dim(rng), dim(rng)};
        if (n % 5 == 0)
            dims[o10] = 0;
        const TwistedEndo f = generate_free_diagram(p, dims, rng());
        const Matrix expected = fiber_trace(f, o01) + fiber_trace(f, o10) - fiber_trace(f, o11);
        log.check(hocolim_trace_bar(f) == expected, "bar trace differs, case " + std::to_string(n));
        log.check(hocolim_trace_resolution(f, r) == expected, "resolution trace differs, case " + std::to_string(n));
        log.check(verify_theorem(f, {true, true, true, {}, &r}).audits_pass(), "report fails, case " + std::to_string(n));
    }
}

// Criterion 2: golden coefficients and method agreement.
void golden_coefficients(Log& log)
{
    log.check(theorem_coefficients(pushout_category()).lambda == std::vector<Rational>{-1, 1, 1},
              "pushout shape coefficients");
    for (const auto& e : catalog()) {
        const TheoremCoefficients t = theorem_coefficients(*e.category);
        log.check(t.lambda_solve == t.lambda_mobius, e.name + ": solve and Moebius differ");
        if (e.category->num_objects() == 1) {
            const long order = long(e.category->num_morphisms());
            for (std::size_t k = 0; k < t.index.size(); ++k)
                log.check(t.lambda[k] == q(long(t.index.entries[k].class_size), order),
                          e.name + ": coefficient is not class size over order");
        }
    }
    log.check(theorem_coefficients(symmetric_group(3)).lambda == std::vector<Rational>{q(1, 6), q(1, 2), q(1, 3)},
              "S3 coefficients");
}

// Criterion 3: witnesses.
void witnesses(Log& log)
{
    for (const auto& e : catalog())
        for (std::size_t dimS : {1, 2})
            for (const auto& w : check_witnesses(e.category, dimS)) {
                const std::string where = e.name + " entry " + std::to_string(w.entry);
                log.check(w.local_traces_match_zeta, where + ": local traces differ from zeta");
                log.check(w.oracles_return_identity, where + ": oracle trace is not the identity");
                log.check(w.coweighting_sum == 1, where + ": coweighting sum is not 1");
            }
}

// Criterion 4: random end-to-end.
void fuzzing(Log& log)
{
    FuzzOptions options;
    options.cases = 200;
    options.seed = 42;
    std::size_t with_bar = 0, with_group = 0;
    for (const auto& c : fuzz(options)) {
        log.check(c.verdict && c.audits, "case " + std::to_string(c.index) + " (" + kind_name(c.kind) +
                                             ", seed " + std::to_string(c.seed) + ") " + c.error);
        for (const auto& name : c.oracles_agreeing) {
            with_bar += name == "bar";
            with_group += name == "group";
        }
    }
    log.check(with_bar > 0 && with_group > 0, "the bar and group oracles were never exercised");
}

// Criterion 5: structure of the index and invariance of local traces.
void structure(Log& log)
{
    std::vector<CategoryPtr> cats;
    for (const auto& e : catalog())
        cats.push_back(e.category);
    for (std::uint64_t seed = 0; seed < 10; ++seed)
        for (auto kind : {CategoryKind::Poset, CategoryKind::Product, CategoryKind::Groupoid})
            cats.push_back(make_category(generate_category(kind, seed)));
    std::mt19937_64 rng(77);
    for (const auto& c : cats) {
        const EndoClassIndex index = endo_class_index(*c);
        const Components comps = d_components(*c);
        log.check(index.size() == comps.count, "index and pi0(d) have different sizes");
        // The pair (id_i, h) must land in a distinct component for each entry.
        const DCategory d = d_category(*c);
        std::vector<bool> seen(comps.count, false);
        for (const auto& e : index.entries) {
            const std::size_t comp = comps.component_of[d.object_of_endo(*c, e.representative)];
            log.check(!seen[comp], "two index entries share a component");
            seen[comp] = true;
        }
        const TheoremCoefficients t = theorem_coefficients(*c);
        Rational centralizers = 1;
        for (const auto& e : index.entries)
            centralizers *= long(e.centralizer_order);
        log.check(t.triangular.determinant == centralizers, "det zeta differs from the centralizer product");
        log.check(t.triangular.determinant == t.triangular.diagonal_product, "det zeta is not the diagonal product");

        const TwistedEndo f = generate_diagram(c, rng(), 3);
        for (MorphismId u = 0; u < c->num_morphisms(); ++u) {
            const auto uinv = inverse_of(*c, u);
            if (!uinv)
                continue;
            for (MorphismId h : c->hom(c->src(u), c->src(u)))
                log.check(local_trace(f, c->src(u), h) ==
                              local_trace(f, c->tgt(u), c->compose(u, c->compose(h, *uinv))),
                          "local trace not invariant under conjugation by an isomorphism");
        }
    }
}

// Criterion 6: audits of the resolution oracle.
void audits(Log& log)
{
    std::vector<CategoryPtr> cats;
    for (const auto& e : catalog())
        cats.push_back(e.category);
    for (std::uint64_t seed = 0; seed < 8; ++seed)
        for (auto kind : {CategoryKind::Poset, CategoryKind::Product, CategoryKind::Groupoid, CategoryKind::Group})
            cats.push_back(make_category(generate_category(kind, seed)));
    std::uint64_t dseed = 1;
    for (const auto& c : cats) {
        const CategoryPtr op = make_category(opposite(*c));
        const Resolution r1 = projective_resolution(op, {0, 1});
        const Resolution r2 = projective_resolution(op, {0, 2});
        log.check(audit_exactness(r1).exact && audit_exactness(r2).exact, "resolution is not exact");
        for (int k = 0; k < 3; ++k) {
            const TwistedEndo f = generate_diagram(c, dseed++, 4);
            const ChainEndo u = resolution_complex(f, r1);
            const Matrix t = lefschetz_trace(u);
            log.check(t == homology_lefschetz_trace(u), "chain and homology Lefschetz traces differ");
            const DirectColimit colim = direct_colimit(f);
            log.check(homology_dims(u.complex()).front() == colim.dim, "dim H0 differs from the colimit");
            log.check(partial_trace(induced_on_homology(u).front(), colim.dim, f.dim_s(), f.dim_t()) == colim.trace,
                      "trace on H0 differs from the colimit");
            log.check(hocolim_trace_resolution(f, r2) == t, "trace depends on the resolution seed");
        }
    }
}

} // namespace

int main()
{
    bool ok = true;
    ok &= run(1, "pushout shape: hocolim trace = tr f01 + tr f10 - tr f11 on 50 random diagrams", pushout_shape);
    ok &= run(2, "golden coefficients and solve/Moebius agreement", golden_coefficients);
    ok &= run(3, "witness checks on every catalog category", witnesses);
    ok &= run(4, "200 random cases agree with every applicable oracle", fuzzing);
    ok &= run(5, "pi0 bijection, zeta determinant, invariance of local traces", structure);
    ok &= run(6, "exactness, Lefschetz on chains and homology, H0 = colimit, seed invariance", audits);
    return ok ? 0 : 1;
}
