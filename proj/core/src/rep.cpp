#include "eitrace/rep.hpp"

#include "eitrace/errors.hpp"
#include "eitrace/json_io.hpp"

#include <filesystem>

namespace eitrace {

Representation::Representation(CategoryPtr base, std::vector<std::size_t> dims, std::vector<Matrix> action)
    : base_(std::move(base)), dims_(std::move(dims)), action_(std::move(action))
{
    if (!base_)
        throw InvalidInput("representation without a base category");
    if (dims_.size() != base_->num_objects())
        throw InvalidInput("representation needs one dimension per object");
    if (action_.size() != base_->num_morphisms())
        throw InvalidInput("representation needs one action matrix per morphism");
}

Representation Representation::constant(CategoryPtr base, std::size_t dim)
{
    std::vector<std::size_t> dims(base->num_objects(), dim);
    std::vector<Matrix> action(base->num_morphisms(), Matrix::identity(dim));
    return Representation(std::move(base), std::move(dims), std::move(action));
}

std::size_t Representation::total_dim() const
{
    std::size_t total = 0;
    for (auto d : dims_)
        total += d;
    return total;
}

TwistedEndo::TwistedEndo(Representation rep, std::size_t dimS, std::size_t dimT, std::vector<Matrix> components)
    : rep_(std::move(rep)), dimS_(dimS), dimT_(dimT), components_(std::move(components))
{
    if (components_.size() != rep_.category().num_objects())
        throw InvalidInput("twisted endomorphism needs one component per object");
}

TwistedEndo TwistedEndo::scalar(Representation rep, const Rational& scalar, std::size_t dimS)
{
    std::vector<Matrix> comps;
    for (auto d : rep.dims())
        comps.push_back(Matrix::identity(d * dimS) * scalar);
    return TwistedEndo(std::move(rep), dimS, dimS, std::move(comps));
}

ValidationReport validate_rep(const Representation& a)
{
    ValidationReport report;
    auto& v = report.violations;
    const FinCategory& c = a.category();
    const auto name = [&](MorphismId m) { return c.morphism(m).name; };
    for (MorphismId h = 0; h < c.num_morphisms(); ++h) {
        const Matrix& m = a.action(h);
        if (m.rows() != a.dim(c.src(h)) || m.cols() != a.dim(c.tgt(h)))
            v.push_back("action of " + name(h) + " has shape " + std::to_string(m.rows()) + "x" +
                        std::to_string(m.cols()) + ", expected " + std::to_string(a.dim(c.src(h))) + "x" +
                        std::to_string(a.dim(c.tgt(h))));
    }
    if (!v.empty())
        return report;
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        if (a.action(c.identity(o)) != Matrix::identity(a.dim(o)))
            v.push_back("identity " + name(c.identity(o)) + " does not act as the identity");
    for (MorphismId f = 0; f < c.num_morphisms(); ++f)
        for (ObjectId d = 0; d < c.num_objects(); ++d)
            for (MorphismId g : c.hom(c.tgt(f), d))
                if (a.action(c.compose(g, f)) != a.action(f) * a.action(g))
                    v.push_back("functoriality fails: A(" + name(g) + " o " + name(f) + ") != A(" + name(f) +
                                ") A(" + name(g) + ")");
    return report;
}

ValidationReport validate_endo(const TwistedEndo& f)
{
    ValidationReport report = validate_rep(f.rep());
    auto& v = report.violations;
    const FinCategory& c = f.category();
    const std::size_t dS = f.dim_s(), dT = f.dim_t();
    bool shapes_ok = true;
    for (ObjectId i = 0; i < c.num_objects(); ++i) {
        const Matrix& m = f.component(i);
        std::size_t d = f.rep().dim(i);
        if (m.rows() != d * dT || m.cols() != d * dS) {
            v.push_back("component at " + c.object_name(i) + " has the wrong shape");
            shapes_ok = false;
        }
    }
    if (!report.ok() && !shapes_ok)
        return report;
    if (!shapes_ok)
        return report;
    const Matrix idS = Matrix::identity(dS), idT = Matrix::identity(dT);
    for (MorphismId h = 0; h < c.num_morphisms(); ++h) {
        const Matrix& ah = f.rep().action(h);
        if (ah.rows() != f.rep().dim(c.src(h)) || ah.cols() != f.rep().dim(c.tgt(h)))
            continue;
        if (kron(ah, idT) * f.component(c.tgt(h)) != f.component(c.src(h)) * kron(ah, idS))
            v.push_back("naturality fails at " + c.morphism(h).name);
    }
    return report;
}

Matrix local_trace(const TwistedEndo& f, ObjectId i, MorphismId h)
{
    const FinCategory& c = f.category();
    if (c.src(h) != i || c.tgt(h) != i)
        throw InvalidInput(c.morphism(h).name + " is not an endomorphism of " + c.object_name(i));
    const std::size_t d = f.rep().dim(i);
    Matrix twisted = kron(f.rep().action(h), Matrix::identity(f.dim_t())) * f.component(i);
    return partial_trace(twisted, d, f.dim_s(), f.dim_t());
}

LocalTraceTable local_trace_table(const TwistedEndo& f, const EndoClassIndex& index)
{
    LocalTraceTable table;
    table.index = index;
    for (const auto& e : index.entries)
        table.values.push_back(local_trace(f, e.object, e.representative));
    return table;
}

LocalTraceTable local_trace_table(const TwistedEndo& f)
{
    return local_trace_table(f, endo_class_index(f.category()));
}

Representation external_hom(const Representation& a, const Representation& b)
{
    const FinCategory& c = a.category();
    if (a.base() != b.base() && !(c == b.category()))
        throw InvalidInput("external hom of representations over different categories");
    auto base = make_category(product(opposite(c), c));
    const std::size_t k = c.num_objects(), n = c.num_morphisms();
    std::vector<std::size_t> dims(k * k);
    for (ObjectId i = 0; i < k; ++i)
        for (ObjectId j = 0; j < k; ++j)
            dims[i * k + j] = a.dim(i) * b.dim(j);
    std::vector<Matrix> action(n * n);
    for (MorphismId u = 0; u < n; ++u)
        for (MorphismId v = 0; v < n; ++v)
            action[u * n + v] = kron(b.action(v), a.action(u).transpose());
    return Representation(std::move(base), std::move(dims), std::move(action));
}

Representation dual_rep(const Representation& a)
{
    auto base = make_category(opposite(a.category()));
    std::vector<Matrix> action;
    for (const auto& m : a.actions())
        action.push_back(m.transpose());
    return Representation(std::move(base), a.dims(), std::move(action));
}

TwistedEndo witness(const CategoryPtr& base, ObjectId j, MorphismId k, std::size_t dimS)
{
    const FinCategory& c = *base;
    if (c.src(k) != j || c.tgt(k) != j)
        throw InvalidInput(c.morphism(k).name + " is not an endomorphism of " + c.object_name(j));
    auto kinv = inverse_of(c, k);
    if (!kinv)
        throw InvalidInput(c.morphism(k).name + " is not an automorphism");
    const std::size_t nobj = c.num_objects();
    // position of m in hom(src(m), j)
    std::vector<std::size_t> pos(c.num_morphisms(), FinCategory::kNone);
    std::vector<std::size_t> dims(nobj);
    for (ObjectId i = 0; i < nobj; ++i) {
        const auto& hom = c.hom(i, j);
        dims[i] = hom.size();
        for (std::size_t p = 0; p < hom.size(); ++p)
            pos[hom[p]] = p;
    }
    std::vector<Matrix> action;
    for (MorphismId g = 0; g < c.num_morphisms(); ++g) {
        ObjectId i = c.src(g), ip = c.tgt(g);
        Matrix m(dims[i], dims[ip]);
        const auto& hom = c.hom(ip, j);
        for (std::size_t p = 0; p < hom.size(); ++p)
            m(pos[c.compose(hom[p], g)], p) = 1;
        action.push_back(std::move(m));
    }
    std::vector<Matrix> comps;
    for (ObjectId i = 0; i < nobj; ++i) {
        Matrix perm(dims[i], dims[i]);
        const auto& hom = c.hom(i, j);
        for (std::size_t p = 0; p < hom.size(); ++p)
            perm(pos[c.compose(*kinv, hom[p])], p) = 1;
        comps.push_back(kron(perm, Matrix::identity(dimS)));
    }
    return TwistedEndo(Representation(base, std::move(dims), std::move(action)), dimS, dimS, std::move(comps));
}

namespace {

Representation rep_from_json(const Json& j, const CategoryPtr& base)
{
    const FinCategory& c = *base;
    if (!j.is_object())
        throw ParseError("representation: expected a JSON object");
    std::vector<std::size_t> dims(c.num_objects(), 0);
    if (!j.contains("dims"))
        throw ParseError("representation: missing field \"dims\"");
    std::vector<bool> seen(c.num_objects(), false);
    for (const auto& [obj, n] : j.at("dims").items()) {
        auto o = c.find_object(obj);
        if (!o)
            throw ParseError("representation: unknown object \"" + obj + "\"");
        if (!n.is_number_unsigned() && !(n.is_number_integer() && n.get<long>() >= 0))
            throw ParseError("representation: dimension of \"" + obj + "\" must be a nonnegative integer");
        dims[*o] = n.get<std::size_t>();
        seen[*o] = true;
    }
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        if (!seen[o])
            throw ParseError("representation: no dimension for object \"" + c.object_name(o) + "\"");
    std::vector<Matrix> action(c.num_morphisms());
    std::vector<bool> given(c.num_morphisms(), false);
    if (j.contains("action")) {
        for (const auto& [mor, mat] : j.at("action").items()) {
            auto h = c.find_morphism(mor);
            if (!h)
                throw ParseError("representation: action for unknown morphism \"" + mor + "\"");
            action[*h] = matrix_from_json(mat, dims[c.src(*h)], dims[c.tgt(*h)], "action of " + mor);
            given[*h] = true;
        }
    }
    for (MorphismId h = 0; h < c.num_morphisms(); ++h) {
        if (given[h])
            continue;
        if (c.is_identity(h))
            action[h] = Matrix::identity(dims[c.src(h)]);
        else if (dims[c.src(h)] == 0 || dims[c.tgt(h)] == 0)
            action[h] = Matrix(dims[c.src(h)], dims[c.tgt(h)]);
        else
            throw ParseError("representation: no action for morphism \"" + c.morphism(h).name + "\"");
    }
    return Representation(base, std::move(dims), std::move(action));
}

} // namespace

Representation parse_representation(std::string_view text, const CategoryPtr& base)
{
    return rep_from_json(parse_json_text(text), base);
}

Representation parse_representation(std::string_view text, std::string_view base_dir)
{
    Json j = parse_json_text(text);
    if (!j.is_object() || !j.contains("category"))
        throw ParseError("representation: missing field \"category\"");
    const Json& cj = j.at("category");
    CategoryPtr base;
    if (cj.is_string()) {
        std::filesystem::path p(cj.get<std::string>());
        if (p.is_relative())
            p = std::filesystem::path(base_dir) / p;
        base = make_category(parse_category(read_text_file(p.string())));
    } else {
        base = make_category(category_from_json(cj));
    }
    return rep_from_json(j, base);
}

TwistedEndo parse_endo(std::string_view text, const Representation& rep)
{
    Json j = parse_json_text(text);
    if (!j.is_object())
        throw ParseError("endomorphism: expected a JSON object");
    const auto dimension = [&](const char* key) -> std::size_t {
        if (!j.contains(key))
            return 1;
        const Json& v = j.at(key);
        if (!v.is_number_integer() || v.get<long>() < 0)
            throw ParseError(std::string("endomorphism: \"") + key + "\" must be a nonnegative integer");
        return v.get<std::size_t>();
    };
    const std::size_t dS = dimension("dimS"), dT = dimension("dimT");
    const FinCategory& c = rep.category();
    std::vector<Matrix> comps(c.num_objects());
    std::vector<bool> given(c.num_objects(), false);
    if (j.contains("components")) {
        for (const auto& [obj, mat] : j.at("components").items()) {
            auto o = c.find_object(obj);
            if (!o)
                throw ParseError("endomorphism: component for unknown object \"" + obj + "\"");
            comps[*o] = matrix_from_json(mat, rep.dim(*o) * dT, rep.dim(*o) * dS, "component at " + obj);
            given[*o] = true;
        }
    }
    for (ObjectId o = 0; o < c.num_objects(); ++o) {
        if (given[o])
            continue;
        if (rep.dim(o) * dS == 0 || rep.dim(o) * dT == 0)
            comps[o] = Matrix(rep.dim(o) * dT, rep.dim(o) * dS);
        else
            throw ParseError("endomorphism: no component for object \"" + c.object_name(o) + "\"");
    }
    return TwistedEndo(rep, dS, dT, std::move(comps));
}

std::string serialize(const Representation& a, bool inline_category)
{
    const FinCategory& c = a.category();
    Json j;
    if (inline_category)
        j["category"] = category_to_json(c);
    Json dims = Json::object();
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        dims[c.object_name(o)] = a.dim(o);
    j["dims"] = std::move(dims);
    Json action = Json::object();
    for (MorphismId h = 0; h < c.num_morphisms(); ++h)
        if (!c.is_identity(h))
            action[c.morphism(h).name] = matrix_to_json(a.action(h));
    j["action"] = std::move(action);
    return j.dump(2) + "\n";
}

std::string serialize(const TwistedEndo& f)
{
    const FinCategory& c = f.category();
    Json j;
    j["dimS"] = f.dim_s();
    j["dimT"] = f.dim_t();
    Json comps = Json::object();
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        comps[c.object_name(o)] = matrix_to_json(f.component(o));
    j["components"] = std::move(comps);
    return j.dump(2) + "\n";
}

} // namespace eitrace
