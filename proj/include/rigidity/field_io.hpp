#pragma once

#include <string>

#include <json.hpp>

#include "rigidity/catalog.hpp"
#include "rigidity/tolerances.hpp"

namespace rigidity {

// ShapeField JSON schema:
//   {"spec": {"kind", "n", "params": {name: number}, "grid": [int], "ambient_curvature"},
//    "samples": [{"coords": [..], "shape_operator": [[..]], "area_weight", "umbilic_flag"}],
//    "minimal_claimed": bool}
// Samples are stored in row-major grid order.

nlohmann::json field_to_json(const ShapeField& field);

/// SchemaError for structural problems, InvariantViolation for violated field
/// invariants; both name the sample index when one is involved.
ShapeField field_from_json(const nlohmann::json& doc, const Tolerances& tol = {});

void write_field(const ShapeField& field, const std::string& path);

/// ParseError if the file is unreadable or not JSON.
ShapeField ingest_field(const std::string& path, const Tolerances& tol = {});

}  // namespace rigidity
