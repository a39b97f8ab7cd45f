#include "rigidity/field_io.hpp"

#include <fstream>
#include <sstream>

#include "rigidity/error.hpp"

namespace rigidity {

using nlohmann::json;

json field_to_json(const ShapeField& field) {
    json params = json::object();
    for (const auto& [k, v] : field.spec.params) params[k] = v;
    json samples = json::array();
    for (const auto& s : field.samples) {
        samples.push_back({{"coords", s.coords},
                           {"shape_operator", s.shape_operator.rows()},
                           {"area_weight", s.area_weight},
                           {"umbilic_flag", s.umbilic_flag}});
    }
    return {{"spec",
             {{"kind", std::string(to_string(field.spec.kind))},
              {"n", field.spec.n},
              {"params", params},
              {"grid", field.spec.grid},
              {"ambient_curvature", field.spec.ambient_curvature}}},
            {"samples", std::move(samples)},
            {"minimal_claimed", field.minimal_claimed}};
}

namespace {

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) fail(ErrorCode::SchemaError, where + "missing '" + key + "'");
    return obj.at(key);
}

double number(const json& v, const std::string& what) {
    if (!v.is_number()) fail(ErrorCode::SchemaError, what + " must be a number");
    return v.get<double>();
}

std::vector<double> number_list(const json& v, const std::string& what) {
    if (!v.is_array()) fail(ErrorCode::SchemaError, what + " must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) out.push_back(number(x, what + " entry"));
    return out;
}

}  // namespace

ShapeField field_from_json(const json& doc, const Tolerances& tol) {
    if (!doc.is_object()) fail(ErrorCode::SchemaError, "top level must be an object");
    ShapeField field;

    const json& spec = member(doc, "spec", "");
    const json& kind = member(spec, "kind", "spec: ");
    if (!kind.is_string()) fail(ErrorCode::SchemaError, "spec.kind must be a string");
    field.spec.kind = surface_kind_from_string(kind.get<std::string>());
    const json& n = member(spec, "n", "spec: ");
    if (!n.is_number_integer()) fail(ErrorCode::SchemaError, "spec.n must be an integer");
    field.spec.n = n.get<int>();
    if (spec.contains("params")) {
        const json& params = spec.at("params");
        if (!params.is_object()) fail(ErrorCode::SchemaError, "spec.params must be an object");
        for (const auto& [k, v] : params.items()) field.spec.params[k] = number(v, "spec.params." + k);
    }
    if (spec.contains("grid")) {
        for (const auto& g : spec.at("grid")) {
            if (!g.is_number_integer()) fail(ErrorCode::SchemaError, "spec.grid entries must be integers");
            field.spec.grid.push_back(g.get<int>());
        }
    }
    if (spec.contains("ambient_curvature")) field.spec.ambient_curvature = number(spec.at("ambient_curvature"), "spec.ambient_curvature");
    try {
        field.spec.validate();
    } catch (const Error& e) {
        fail(ErrorCode::InvariantViolation, std::string("spec: ") + e.what());
    }

    const json& minimal = member(doc, "minimal_claimed", "");
    if (!minimal.is_boolean()) fail(ErrorCode::SchemaError, "minimal_claimed must be a boolean");
    field.minimal_claimed = minimal.get<bool>();

    const json& samples = member(doc, "samples", "");
    if (!samples.is_array()) fail(ErrorCode::SchemaError, "samples must be an array");
    field.samples.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const std::string where = "sample " + std::to_string(i) + ": ";
        const json& s = samples[i];
        std::vector<double> coords = number_list(member(s, "coords", where), where + "coords");
        const json& rows_json = member(s, "shape_operator", where);
        if (!rows_json.is_array()) fail(ErrorCode::SchemaError, where + "shape_operator must be an array of rows");
        std::vector<std::vector<double>> rows;
        for (const auto& r : rows_json) rows.push_back(number_list(r, where + "shape_operator row"));
        if (static_cast<int>(rows.size()) != field.spec.n) {
            fail(ErrorCode::InvariantViolation, where + "shape_operator has " + std::to_string(rows.size()) +
                                                    " rows, expected " + std::to_string(field.spec.n));
        }
        SymMatrix a(field.spec.n);
        try {
            a = SymMatrix::from_rows(rows);
        } catch (const Error& e) {
            fail(ErrorCode::InvariantViolation, where + e.what());
        }
        const double w = number(member(s, "area_weight", where), where + "area_weight");
        const json& flag = member(s, "umbilic_flag", where);
        if (!flag.is_boolean()) fail(ErrorCode::SchemaError, where + "umbilic_flag must be a boolean");
        field.samples.push_back(SamplePoint{std::move(coords), std::move(a), w, flag.get<bool>()});
    }

    Tolerances effective = tol;
    if (auto it = field.spec.params.find("profile_tol"); it != field.spec.params.end()) {
        effective.minimality = std::max(tol.minimality, it->second);
    }
    validate_field(field, effective);
    return field;
}

void write_field(const ShapeField& field, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::BadParams, "cannot open '" + path + "' for writing");
    out << field_to_json(field).dump() << '\n';
    if (!out) fail(ErrorCode::BadParams, "failed writing '" + path + "'");
}

ShapeField ingest_field(const std::string& path, const Tolerances& tol) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, path + ": " + e.what());
    }
    return field_from_json(doc, tol);
}

}  // namespace rigidity
