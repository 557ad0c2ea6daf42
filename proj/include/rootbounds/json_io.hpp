#pragma once

#include <json.hpp>

#include "rootbounds/bounds.hpp"
#include "rootbounds/companion.hpp"
#include "rootbounds/oracle.hpp"
#include "rootbounds/theorems.hpp"

// JSON wire forms. Polynomials accept {"coeffs": [...]} (monic implied) or
// {"full": [...]} (normalized on load); matrices travel as row-major arrays
// with a kind tag; bound reports carry one entry per bound family.
namespace rootbounds::io {

using json = nlohmann::json;

json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json to_json(const ShapeSpec& s);
ShapeSpec shape_from_json(const json& j);

const char* kind_name(MatrixKind kind);
json to_json(const CompanionMatrix& C);
CompanionMatrix matrix_from_json(const json& j);

json to_json(const PartitionSpec& spec);
PartitionSpec partition_from_json(const json& j);

json to_json(const BoundReport& report);
BoundReport report_from_json(const json& j);

json to_json(const oracle::RootSet& roots);

json to_json(const theorems::PropertyResult& result);

}  // namespace rootbounds::io
