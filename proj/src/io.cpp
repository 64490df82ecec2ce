#include "qres/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "qres/catalog.hpp"
#include "qres/error.hpp"

namespace qres::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what)
{
    fail(ErrorKind::ParseError, (where.empty() ? std::string("/") : where) + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object())
        bad(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end())
        bad(where, std::string("missing field '") + key + "'");
    return *it;
}

std::size_t count_from(const Json& j, const std::string& where)
{
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
        bad(where, "expected a non-negative integer");
    return j.get<std::size_t>();
}

const Json& array_of(const Json& j, std::size_t size, const std::string& where)
{
    if (!j.is_array())
        bad(where, "expected an array");
    if (j.size() != size)
        bad(where, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
    return j;
}

std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }

// Basis index of the length-one path along shape arrow alpha.
std::size_t arrow_basis_index(const Shape& shape, std::size_t alpha)
{
    const auto& basis = shape.algebra()->basis();
    for (std::size_t b = 0; b < basis.size(); ++b)
        if (basis[b].arrows == std::vector<std::size_t>{alpha})
            return b;
    fail(ErrorKind::Internal, "shape arrow vanishes in the shape category");
}

// Λ-components of a diagram map, grouped by object.
std::vector<Matrix> flatten_groups(const Json& j, const Setting& s, const Diagram& source, const Diagram& target,
                                   const std::string& where)
{
    const std::size_t nb = s.base_vertex_count();
    array_of(j, s.object_count(), where);
    std::vector<Matrix> components;
    for (std::size_t p = 0; p < s.object_count(); ++p) {
        const std::string wp = at(where, p);
        array_of(j[p], nb, wp);
        for (std::size_t v = 0; v < nb; ++v) {
            const std::size_t lv = s.vertex(p, v);
            components.push_back(matrix_from_json(s.field(), j[p][v], target.dim(lv), source.dim(lv), at(wp, v)));
        }
    }
    return components;
}

}  // namespace

Json field_to_json(Field f)
{
    if (f.is_rational())
        return "Q";
    return f.characteristic();
}

Field field_from_json(const Json& j)
{
    try {
        if (j.is_number_integer())
            return Field::prime(j.get<std::uint64_t>());
        if (j.is_string())
            return Field::parse(j.get<std::string>());
    } catch (const Error& e) {
        bad("/field", e.what());
    }
    bad("/field", "expected a prime or \"Q\"");
}

Json scalar_to_json(const Scalar& s)
{
    if (s.field().is_prime())
        return s.residue();
    const mpq_class& q = s.rational();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Scalar scalar_from_json(Field f, const Json& j, const std::string& where)
{
    if (j.is_number_integer())
        return Scalar(f, j.get<long long>());
    if (j.is_string()) {
        try {
            return Scalar::parse(f, j.get<std::string>());
        } catch (const Error& e) {
            bad(where, e.what());
        }
    }
    bad(where, "expected an integer or a \"num/den\" string");
}

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < m.cols(); ++k)
            row.push_back(scalar_to_json(m.at(i, k)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where)
{
    Matrix m(f, rows, cols);
    // An empty list stands for any matrix with no entries.
    if (j.is_array() && j.empty() && rows * cols == 0)
        return m;
    array_of(j, rows, where);
    for (std::size_t i = 0; i < rows; ++i) {
        array_of(j[i], cols, at(where, i));
        for (std::size_t k = 0; k < cols; ++k)
            m.set(i, k, scalar_from_json(f, j[i][k], at(at(where, i), k)));
    }
    return m;
}

Json algebra_to_json(const QuiverAlgebra& a)
{
    Json arrows = Json::array();
    for (const auto& arrow : a.arrows())
        arrows.push_back({{"name", arrow.name}, {"source", a.vertices()[arrow.source]},
                          {"target", a.vertices()[arrow.target]}});
    Json relations = Json::array();
    for (const auto& rel : a.relations()) {
        Json terms = Json::array();
        for (const auto& term : rel) {
            Json path = Json::array();
            for (std::size_t arrow : term.arrows)
                path.push_back(a.arrows()[arrow].name);
            terms.push_back({{"coeff", scalar_to_json(term.coeff)}, {"path", path}});
        }
        relations.push_back(std::move(terms));
    }
    return {{"vertices", a.vertices()}, {"arrows", arrows}, {"relations", relations}};
}

AlgebraPtr algebra_from_json(Field f, const Json& j, const std::string& where)
{
    if (!j.is_object())
        bad(where, "expected an object");
    if (j.contains("named")) {
        const Json& name = j["named"];
        if (!name.is_string())
            bad(at(where, "named"), "expected a string");
        try {
            return named_algebra(name.get<std::string>(), f);
        } catch (const Error& e) {
            bad(at(where, "named"), e.what());
        }
    }
    const Json& vs = member(j, "vertices", where);
    if (!vs.is_array())
        bad(at(where, "vertices"), "expected an array");
    std::vector<std::string> vertices;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (!vs[i].is_string())
            bad(at(at(where, "vertices"), i), "expected a string");
        vertices.push_back(vs[i].get<std::string>());
    }
    auto index_of = [&](const Json& name, const std::string& w) {
        if (!name.is_string())
            bad(w, "expected a vertex name");
        for (std::size_t i = 0; i < vertices.size(); ++i)
            if (vertices[i] == name.get<std::string>())
                return i;
        bad(w, "unknown vertex '" + name.get<std::string>() + "'");
    };
    std::vector<Arrow> arrows;
    std::map<std::string, std::size_t> arrow_index;
    const std::string wa = at(where, "arrows");
    const Json empty = Json::array();
    const Json& as = j.contains("arrows") ? j["arrows"] : empty;
    if (!as.is_array())
        bad(wa, "expected an array");
    for (std::size_t i = 0; i < as.size(); ++i) {
        const std::string w = at(wa, i);
        const Json& name = member(as[i], "name", w);
        if (!name.is_string())
            bad(at(w, "name"), "expected a string");
        if (!arrow_index.emplace(name.get<std::string>(), arrows.size()).second)
            bad(at(w, "name"), "duplicate arrow name");
        arrows.push_back({name.get<std::string>(), index_of(member(as[i], "source", w), at(w, "source")),
                          index_of(member(as[i], "target", w), at(w, "target"))});
    }
    std::vector<Relation> relations;
    const std::string wr = at(where, "relations");
    const Json& rs = j.contains("relations") ? j["relations"] : empty;
    if (!rs.is_array())
        bad(wr, "expected an array");
    for (std::size_t r = 0; r < rs.size(); ++r) {
        if (!rs[r].is_array())
            bad(at(wr, r), "expected a list of terms");
        Relation rel;
        for (std::size_t t = 0; t < rs[r].size(); ++t) {
            const std::string w = at(at(wr, r), t);
            RelationTerm term;
            term.coeff = rs[r][t].contains("coeff") ? scalar_from_json(f, rs[r][t]["coeff"], at(w, "coeff"))
                                                    : Scalar::one(f);
            const Json& path = member(rs[r][t], "path", w);
            if (!path.is_array() || path.empty())
                bad(at(w, "path"), "expected a non-empty list of arrow names");
            for (std::size_t k = 0; k < path.size(); ++k) {
                auto it = path[k].is_string() ? arrow_index.find(path[k].get<std::string>()) : arrow_index.end();
                if (it == arrow_index.end())
                    bad(at(at(w, "path"), k), "unknown arrow");
                term.arrows.push_back(it->second);
            }
            rel.push_back(std::move(term));
        }
        relations.push_back(std::move(rel));
    }
    try {
        return QuiverAlgebra::create(f, std::move(vertices), std::move(arrows), std::move(relations));
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

Json shape_to_json(const Shape& shape, std::size_t degrees)
{
    switch (shape.kind()) {
    case ShapeKind::Loop:
        return {{"kind", "loop"}};
    case ShapeKind::Cyclic:
        return {{"kind", "cyclic"}, {"m", shape.period()}, {"N", shape.nilpotency()}};
    default:
        return {{"kind", "custom"},
                {"category", algebra_to_json(*shape.algebra())},
                {"serre", shape.serre_map()},
                {"degrees", degrees}};
    }
}

Json setting_to_json(const Setting& s)
{
    return {{"field", field_to_json(s.field())},
            {"algebra", algebra_to_json(*s.base())},
            {"shape", shape_to_json(s.shape(), s.homology_degrees())}};
}

SettingPtr setting_from_json(const Json& doc, std::optional<Field> field)
{
    const Field f = field ? *field : field_from_json(member(doc, "field", ""));
    AlgebraPtr base = algebra_from_json(f, member(doc, "algebra", ""), "/algebra");
    const Json& sj = member(doc, "shape", "");
    const Json& kind = member(sj, "kind", "/shape");
    if (!kind.is_string())
        bad("/shape/kind", "expected a string");
    const std::string k = kind.get<std::string>();
    try {
        if (k == "loop")
            return Setting::create(Shape::loop(f), base);
        if (k == "cyclic")
            return Setting::create(
                Shape::cyclic(f, count_from(member(sj, "m", "/shape"), "/shape/m"),
                              count_from(member(sj, "N", "/shape"), "/shape/N")),
                base);
        if (k == "custom") {
            AlgebraPtr cat = algebra_from_json(f, member(sj, "category", "/shape"), "/shape/category");
            std::optional<std::vector<std::size_t>> serre;
            if (sj.contains("serre")) {
                if (!sj["serre"].is_array())
                    bad("/shape/serre", "expected an array");
                serre.emplace();
                for (std::size_t i = 0; i < sj["serre"].size(); ++i)
                    serre->push_back(count_from(sj["serre"][i], at("/shape/serre", i)));
            }
            const std::size_t degrees = sj.contains("degrees") ? count_from(sj["degrees"], "/shape/degrees") : 2;
            return Setting::create(Shape::custom(cat, serre), base, degrees);
        }
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError)
            throw;
        bad("/shape", e.what());
    }
    bad("/shape/kind", "expected \"loop\", \"cyclic\" or \"custom\"");
}

Json module_to_json(const Module& m)
{
    Json arrows = Json::object();
    const auto& as = m.algebra().arrows();
    for (std::size_t a = 0; a < as.size(); ++a)
        arrows[as[a].name] = matrix_to_json(m.arrow(a));
    return {{"dims", m.dims()}, {"arrows", arrows}};
}

Module module_from_json(const AlgebraPtr& a, const Json& j, const std::string& where)
{
    const Json& dj = array_of(member(j, "dims", where), a->vertex_count(), at(where, "dims"));
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < dj.size(); ++v)
        dims.push_back(count_from(dj[v], at(at(where, "dims"), v)));
    const Json empty = Json::object();
    const Json& aj = j.contains("arrows") ? j["arrows"] : empty;
    if (!aj.is_object())
        bad(at(where, "arrows"), "expected an object keyed by arrow name");
    for (auto it = aj.begin(); it != aj.end(); ++it) {
        bool known = false;
        for (const auto& arrow : a->arrows())
            known = known || arrow.name == it.key();
        if (!known)
            bad(at(at(where, "arrows"), it.key()), "unknown arrow");
    }
    std::vector<Matrix> maps;
    for (const auto& arrow : a->arrows()) {
        const std::size_t r = dims[arrow.target], c = dims[arrow.source];
        if (aj.contains(arrow.name))
            maps.push_back(matrix_from_json(a->field(), aj[arrow.name], r, c, at(at(where, "arrows"), arrow.name)));
        else
            maps.emplace_back(a->field(), r, c);
    }
    try {
        return Module(a, std::move(dims), std::move(maps));
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

Json map_to_json(const ModuleMap& f)
{
    Json components = Json::array();
    for (const auto& c : f.components())
        components.push_back(matrix_to_json(c));
    return components;
}

ModuleMap map_from_json(const Module& source, const Module& target, const Json& j, const std::string& where)
{
    const std::size_t n = source.dims().size();
    array_of(j, n, where);
    std::vector<Matrix> components;
    for (std::size_t v = 0; v < n; ++v)
        components.push_back(matrix_from_json(source.field(), j[v], target.dim(v), source.dim(v), at(where, v)));
    try {
        return ModuleMap(source, target, std::move(components));
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

Json diagram_to_json(const Setting& s, const Diagram& x)
{
    const Shape& shape = s.shape();
    if (shape.is_loop()) {
        ModuleMap d = s.action(x, arrow_basis_index(shape, 0));
        return {{"module", module_to_json(evaluate(s, 0, x))}, {"differential", map_to_json(d)}};
    }
    Json values = Json::array();
    for (std::size_t q = 0; q < s.object_count(); ++q)
        values.push_back(module_to_json(evaluate(s, q, x)));
    Json maps = Json::array();
    for (std::size_t alpha = 0; alpha < shape.algebra()->arrows().size(); ++alpha)
        maps.push_back(map_to_json(s.action(x, arrow_basis_index(shape, alpha))));
    return {{"values", values}, {"maps", maps}};
}

Diagram diagram_from_json(const Setting& s, const Json& j, const std::string& where)
{
    const Shape& shape = s.shape();
    std::vector<Module> values;
    std::vector<ModuleMap> arrows;
    const auto& shape_arrows = shape.algebra()->arrows();
    if (shape.is_loop()) {
        values.push_back(module_from_json(s.base(), member(j, "module", where), at(where, "module")));
        arrows.push_back(map_from_json(values[0], values[0], member(j, "differential", where),
                                       at(where, "differential")));
    } else {
        const std::string wv = at(where, "values");
        const Json& vj = array_of(member(j, "values", where), s.object_count(), wv);
        for (std::size_t q = 0; q < vj.size(); ++q)
            values.push_back(module_from_json(s.base(), vj[q], at(wv, q)));
        const std::string wm = at(where, "maps");
        const Json& mj = array_of(member(j, "maps", where), shape_arrows.size(), wm);
        for (std::size_t alpha = 0; alpha < mj.size(); ++alpha)
            arrows.push_back(map_from_json(values[shape_arrows[alpha].source], values[shape_arrows[alpha].target],
                                           mj[alpha], at(wm, alpha)));
    }
    try {
        return s.assemble(values, arrows);
    } catch (const Error& e) {
        bad(where, std::string("not a diagram of this shape: ") + e.what());
    }
}

Json diagram_map_to_json(const Setting& s, const DiagramMap& f)
{
    const std::size_t nb = s.base_vertex_count();
    Json groups = Json::array();
    for (std::size_t p = 0; p < s.object_count(); ++p) {
        Json group = Json::array();
        for (std::size_t v = 0; v < nb; ++v)
            group.push_back(matrix_to_json(f.component(s.vertex(p, v))));
        groups.push_back(std::move(group));
    }
    return groups;
}

DiagramMap diagram_map_from_json(const Setting& s, const Diagram& source, const Diagram& target, const Json& j,
                                 const std::string& where)
{
    auto components = flatten_groups(j, s, source, target, where);
    try {
        return DiagramMap(source, target, std::move(components));
    } catch (const Error& e) {
        bad(where, e.what());
    }
}

Json diagram_document(const Setting& s, const Diagram& x)
{
    Json doc = setting_to_json(s);
    doc["schema"] = kSchema;
    doc["diagram"] = diagram_to_json(s, x);
    return doc;
}

Json module_document(const Module& m)
{
    return {{"schema", kSchema},
            {"field", field_to_json(m.field())},
            {"algebra", algebra_to_json(m.algebra())},
            {"module", module_to_json(m)}};
}

namespace {

void check_schema(const Json& doc)
{
    if (!doc.is_object())
        bad("", "expected a JSON object");
    const Json& schema = member(doc, "schema", "");
    if (schema != kSchema)
        bad("/schema", std::string("expected \"") + kSchema + "\"");
}

}  // namespace

ModuleInput read_module_document(const Json& doc, std::optional<Field> field)
{
    check_schema(doc);
    const Field f = field ? *field : field_from_json(member(doc, "field", ""));
    AlgebraPtr a = algebra_from_json(f, member(doc, "algebra", ""), "/algebra");
    return {a, module_from_json(a, member(doc, "module", ""), "/module")};
}

DiagramInput read_diagram_document(const Json& doc, std::optional<Field> field)
{
    check_schema(doc);
    SettingPtr s = setting_from_json(doc, field);
    return {s, diagram_from_json(*s, member(doc, "diagram", ""), "/diagram")};
}

Json parse(const std::string& text, const std::string& source_name)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        // Byte offset to line and column.
        std::size_t line = 1, column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        fail(ErrorKind::ParseError,
             source_name + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON");
    }
}

Json load(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        fail(ErrorKind::ParseError, path + ": cannot open");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path);
}

std::string digest(const Json& j)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : j.dump()) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char out[17];
    std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
    return out;
}

std::string digest(const Module& m)
{
    return digest(Json{{"algebra", algebra_to_json(m.algebra())}, {"module", module_to_json(m)}});
}

}  // namespace qres::io
