#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qres/diagrams.hpp"

namespace qres::io {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "qres/1";

// Prime fields as their characteristic, the rationals as "Q".
Json field_to_json(Field f);
Field field_from_json(const Json& j);

// Residues 0..p-1 for prime fields, "num/den" strings for the rationals.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(Field f, const Json& j, const std::string& where);

// Row-major list of rows.
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(Field f, const Json& j, std::size_t rows, std::size_t cols, const std::string& where);

// {"vertices": [...], "arrows": [{"name", "source", "target"}], "relations": [[{"coeff", "path"}]]}
// or {"named": "A3"}.
Json algebra_to_json(const QuiverAlgebra& a);
AlgebraPtr algebra_from_json(Field f, const Json& j, const std::string& where);

// {"kind": "loop"}, {"kind": "cyclic", "m": m, "N": n}, or
// {"kind": "custom", "category": algebra, "serre": [...], "degrees": d}.
Json shape_to_json(const Shape& shape, std::size_t degrees);
Json setting_to_json(const Setting& s);
// Reads "field", "algebra" and "shape" from a document. The field, when
// given, overrides the document's.
SettingPtr setting_from_json(const Json& doc, std::optional<Field> field = std::nullopt);

// {"dims": [...], "arrows": {"name": matrix}}; a missing arrow is zero.
Json module_to_json(const Module& m);
Module module_from_json(const AlgebraPtr& a, const Json& j, const std::string& where);
// Components per vertex.
Json map_to_json(const ModuleMap& f);
ModuleMap map_from_json(const Module& source, const Module& target, const Json& j, const std::string& where);

// Loop shape: {"module", "differential"} with one matrix per base vertex.
// Otherwise {"values": [module per object], "maps": [[matrix per base vertex] per shape arrow]}.
Json diagram_to_json(const Setting& s, const Diagram& x);
Diagram diagram_from_json(const Setting& s, const Json& j, const std::string& where);
// Components grouped by object: [[matrix per base vertex] per object].
Json diagram_map_to_json(const Setting& s, const DiagramMap& f);
DiagramMap diagram_map_from_json(const Setting& s, const Diagram& source, const Diagram& target, const Json& j,
                                 const std::string& where);

// Header of every document: schema, field, algebra, shape.
Json diagram_document(const Setting& s, const Diagram& x);
Json module_document(const Module& m);

struct ModuleInput {
    AlgebraPtr algebra;
    Module module;
};
ModuleInput read_module_document(const Json& doc, std::optional<Field> field = std::nullopt);

struct DiagramInput {
    SettingPtr setting;
    Diagram diagram;
};
DiagramInput read_diagram_document(const Json& doc, std::optional<Field> field = std::nullopt);

// Parses text, turning syntax errors into ParseError with line and column.
Json parse(const std::string& text, const std::string& source_name);
Json load(const std::string& path);

// FNV-1a 64 of the compact serialization, in hex.
std::string digest(const Json& j);
std::string digest(const Module& m);

}  // namespace qres::io
