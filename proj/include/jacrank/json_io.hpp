#pragma once

#include <string>

#include "json.hpp"
#include "jacrank/curve.hpp"
#include "jacrank/cyclo.hpp"
#include "jacrank/ff.hpp"
#include "jacrank/prank.hpp"

namespace jacrank {

using Json = nlohmann::ordered_json;

Json to_json(const FieldSpec& spec);
Json to_json(const CycloInt& x);
/// Integer for prime fields, coefficient array (constant first) otherwise.
Json element_json(const Field& F, FqElem a);
Json to_json(const CurveSpec& curve);
Json to_json(const PrankVerdict& v);

/// Accepts an integer in [0, p) (a prime-subfield constant) or a coefficient array.
FqElem element_from_json(const Field& F, const Json& j, const std::string& where);

/// CurveSpecFile: {"p", "h", "m", "exponents", "branch", "base": "P1" | {"m0", "f0"}}.
/// Shape errors are reported as Validation with the JSON pointer of the
/// offending field; CurveSpec invariants keep their own codes.
CurveSpec curve_from_json(const Json& j);
CurveSpec load_curve(const std::string& path);

}  // namespace jacrank
