#include "eitrace/json_io.hpp"

#include "eitrace/errors.hpp"

#include <fstream>
#include <sstream>

namespace eitrace {

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte)
{
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

const Json& field(const Json& j, const char* key, std::string_view what)
{
    if (!j.is_object() || !j.contains(key))
        throw ParseError(std::string(what) + ": missing field \"" + key + "\"");
    return j.at(key);
}

std::string as_string(const Json& j, std::string_view what)
{
    if (!j.is_string())
        throw ParseError(std::string(what) + ": expected a string");
    return j.get<std::string>();
}

} // namespace

Json parse_json_text(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        auto [line, column] = line_column(text, e.byte);
        throw ParseError(std::string("syntax error: ") + e.what(), line, column);
    }
}

std::string read_text_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json category_to_json(const FinCategory& c)
{
    Json j;
    j["objects"] = c.object_names();
    Json morphisms = Json::array();
    for (const auto& m : c.morphisms())
        morphisms.push_back({{"id", m.name}, {"src", c.object_name(m.src)}, {"tgt", c.object_name(m.tgt)}});
    j["morphisms"] = std::move(morphisms);
    Json identities = Json::object();
    for (ObjectId o = 0; o < c.num_objects(); ++o)
        identities[c.object_name(o)] = c.morphism(c.identity(o)).name;
    j["identities"] = std::move(identities);
    Json compose = Json::array();
    for (MorphismId g = 0; g < c.num_morphisms(); ++g) {
        if (c.is_identity(g))
            continue;
        for (MorphismId f = 0; f < c.num_morphisms(); ++f) {
            if (c.is_identity(f) || !c.composable(g, f))
                continue;
            if (auto gf = c.try_compose(g, f))
                compose.push_back({c.morphism(g).name, c.morphism(f).name, c.morphism(*gf).name});
        }
    }
    j["compose"] = std::move(compose);
    return j;
}

FinCategory category_from_json(const Json& j)
{
    const std::string what = "category";
    if (!j.is_object())
        throw ParseError("category: expected a JSON object");
    std::vector<std::string> objects;
    for (const auto& o : field(j, "objects", what))
        objects.push_back(as_string(o, "category objects"));
    std::unordered_map<std::string, ObjectId> object_index;
    for (ObjectId i = 0; i < objects.size(); ++i)
        if (!object_index.emplace(objects[i], i).second)
            throw ParseError("category: duplicate object \"" + objects[i] + "\"");
    const auto object = [&](const Json& v) {
        std::string name = as_string(v, "category morphism endpoint");
        auto it = object_index.find(name);
        if (it == object_index.end())
            throw ParseError("category: unknown object \"" + name + "\"");
        return it->second;
    };

    std::vector<MorphismInfo> morphisms;
    std::unordered_map<std::string, MorphismId> morphism_index;
    const Json empty_array = Json::array();
    const Json& mor_json = j.contains("morphisms") ? j.at("morphisms") : empty_array;
    for (const auto& m : mor_json) {
        MorphismInfo info{as_string(field(m, "id", "morphism"), "morphism id"), object(field(m, "src", "morphism")),
                          object(field(m, "tgt", "morphism"))};
        if (!morphism_index.emplace(info.name, morphisms.size()).second)
            throw ParseError("category: duplicate morphism \"" + info.name + "\"");
        morphisms.push_back(std::move(info));
    }
    const auto morphism = [&](const Json& v) {
        std::string name = as_string(v, "category morphism reference");
        auto it = morphism_index.find(name);
        if (it == morphism_index.end())
            throw ParseError("category: unknown morphism \"" + name + "\"");
        return it->second;
    };

    std::vector<MorphismId> identities(objects.size(), FinCategory::kNone);
    if (j.contains("identities")) {
        for (const auto& [obj, mor] : j.at("identities").items()) {
            auto it = object_index.find(obj);
            if (it == object_index.end())
                throw ParseError("category: identity for unknown object \"" + obj + "\"");
            identities[it->second] = morphism(mor);
        }
    }
    for (ObjectId o = 0; o < objects.size(); ++o)
        if (identities[o] == FinCategory::kNone)
            throw ParseError("category: object \"" + objects[o] + "\" has no identity");

    std::vector<std::array<MorphismId, 3>> composites;
    if (j.contains("compose")) {
        for (const auto& entry : j.at("compose")) {
            if (!entry.is_array() || entry.size() != 3)
                throw ParseError("category: compose entries must be [g, f, gf] triples");
            MorphismId g = morphism(entry[0]);
            MorphismId f = morphism(entry[1]);
            if (morphisms[f].tgt != morphisms[g].src)
                throw ParseError("category: compose entry (" + morphisms[g].name + ", " + morphisms[f].name +
                                 ") is not a composable pair");
            composites.push_back({g, f, morphism(entry[2])});
        }
    }
    try {
        return FinCategory(std::move(objects), std::move(morphisms), std::move(identities), composites);
    } catch (const InvalidInput& e) {
        throw ParseError(std::string("category: ") + e.what());
    }
}

FinCategory parse_category(std::string_view text)
{
    return category_from_json(parse_json_text(text));
}

std::string serialize(const FinCategory& c)
{
    return category_to_json(c).dump(2) + "\n";
}

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(format_rational(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::string_view what)
{
    const auto fail = [&](const std::string& msg) {
        throw ParseError(std::string(what) + ": " + msg + " (expected " + std::to_string(rows) + "x" +
                         std::to_string(cols) + ")");
    };
    if (!j.is_array() || j.size() != rows)
        fail("wrong number of rows");
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const Json& row = j[r];
        if (!row.is_array() || row.size() != cols)
            fail("wrong number of columns in row " + std::to_string(r));
        for (std::size_t c = 0; c < cols; ++c) {
            const Json& v = row[c];
            if (v.is_string())
                m(r, c) = parse_rational(v.get<std::string>());
            else if (v.is_number_integer())
                m(r, c) = Rational(v.get<long>());
            else
                fail("entries must be integers or \"p/q\" strings");
        }
    }
    return m;
}

} // namespace eitrace
