#include "eitrace/coweight.hpp"

#include "eitrace/errors.hpp"

#include <algorithm>
#include <functional>

namespace eitrace {

ZetaMatrix zeta_matrix(const FinCategory& c)
{
    const std::size_t n = c.num_objects();
    ZetaMatrix z{Matrix(n, n)};
    for (ObjectId i = 0; i < n; ++i)
        for (ObjectId j = 0; j < n; ++j)
            z.matrix(i, j) = static_cast<unsigned long>(c.hom_count(i, j));
    return z;
}

Coweighting coweighting_solve(const FinCategory& c)
{
    const std::size_t n = c.num_objects();
    const Matrix zt = zeta_matrix(c).matrix.transpose();
    Matrix ones(n, 1);
    for (std::size_t i = 0; i < n; ++i)
        ones(i, 0) = 1;
    if (rank(zt) != n)
        throw SingularZeta("zeta matrix is singular over Q; no unique coweighting");
    auto x = solve(zt, ones);
    Coweighting w;
    for (std::size_t i = 0; i < n; ++i)
        w.lambda.push_back((*x)(i, 0));
    return w;
}

Coweighting coweighting_mobius(const FinCategory& c)
{
    EIReport ei = ei_report(c);
    if (!ei.ei)
        throw NotEI("endomorphism " + c.morphism(ei.non_invertible.front()).name + " is not invertible");
    if (!is_skeletal(c))
        throw InvalidInput("Moebius coweighting needs a skeletal category");
    const std::size_t n = c.num_objects();
    std::vector<Rational> inv_aut(n);
    for (ObjectId i = 0; i < n; ++i)
        inv_aut[i] = Rational(1, static_cast<unsigned long>(c.hom_count(i, i)));

    Coweighting w;
    w.lambda.assign(n, Rational(0));
    std::vector<bool> visited(n, false);
    // Extends a path ending at `a` whose weight so far (sign included) is `weight`.
    std::function<void(ObjectId, const Rational&)> walk = [&](ObjectId a, const Rational& weight) {
        const Rational here = weight * inv_aut[a];
        w.lambda[a] += here;
        visited[a] = true;
        for (ObjectId b = 0; b < n; ++b) {
            if (visited[b] || c.hom_count(a, b) == 0)
                continue;
            walk(b, -here * static_cast<unsigned long>(c.hom_count(a, b)));
        }
        visited[a] = false;
    };
    for (ObjectId i = 0; i < n; ++i)
        walk(i, Rational(1));
    return w;
}

TriangularOrder triangular_order(const ZetaMatrix& zeta)
{
    const std::size_t n = zeta.size();
    const Matrix& z = zeta.matrix;
    // Kahn's algorithm, least index first among the ready ones.
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (a != b && z(a, b) != 0)
                ++indegree[b];
    TriangularOrder t;
    std::vector<bool> placed(n, false);
    while (t.order.size() < n) {
        std::size_t next = n;
        for (std::size_t a = 0; a < n && next == n; ++a)
            if (!placed[a] && indegree[a] == 0)
                next = a;
        if (next == n)
            throw InvalidInput("zeta has a cycle between distinct objects; no triangular order");
        placed[next] = true;
        t.order.push_back(next);
        for (std::size_t b = 0; b < n; ++b)
            if (b != next && z(next, b) != 0)
                --indegree[b];
    }
    t.zeta = Matrix(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t col = 0; col < n; ++col)
            t.zeta(r, col) = z(t.order[r], t.order[col]);
    t.determinant = determinant(t.zeta);
    t.diagonal_product = 1;
    for (std::size_t r = 0; r < n; ++r)
        t.diagonal_product *= t.zeta(r, r);
    return t;
}

TheoremCoefficients theorem_coefficients(const FinCategory& i)
{
    TheoremCoefficients out;
    out.index = endo_class_index(i);
    out.characteristic = characteristic(i);
    const EndoCategory e = endo_category(i);
    const Core ecore = core(*e.category);

    const Coweighting solved = coweighting_solve(ecore.category);
    const Coweighting mobius = coweighting_mobius(ecore.category);
    if (solved.lambda != mobius.lambda)
        throw InternalMismatch("linear solve and path formula disagree on the coweighting of E(I)");

    // Each core object of E(I) is an endomorphism; match it with its index entry.
    const std::size_t n = out.index.size();
    if (ecore.representatives.size() != n)
        throw InternalMismatch("core of E(I) has " + std::to_string(ecore.representatives.size()) +
                               " objects but the index has " + std::to_string(n) + " entries");
    std::vector<std::size_t> entry_of(n, FinCategory::kNone);
    std::vector<bool> hit(n, false);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t k = out.index.locate(i, e.endo[ecore.representatives[x]]);
        if (hit[k])
            throw InternalMismatch("two core objects of E(I) map to one index entry");
        hit[k] = true;
        entry_of[x] = k;
    }
    out.lambda.assign(n, Rational(0));
    out.lambda_solve.assign(n, Rational(0));
    out.lambda_mobius.assign(n, Rational(0));
    for (std::size_t x = 0; x < n; ++x) {
        out.lambda_solve[entry_of[x]] = solved.lambda[x];
        out.lambda_mobius[entry_of[x]] = mobius.lambda[x];
    }
    out.lambda = out.lambda_solve;

    const FinCategory& ec = *e.category;
    ZetaMatrix z{Matrix(n, n)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            z.matrix(a, b) = static_cast<unsigned long>(
                ec.hom_count(e.object_of_endo[out.index.entries[a].representative],
                             e.object_of_endo[out.index.entries[b].representative]));
    out.zeta = z.matrix;
    out.triangular = triangular_order(z);
    return out;
}

} // namespace eitrace
