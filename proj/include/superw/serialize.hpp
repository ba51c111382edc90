#pragma once

#include <json.hpp>

#include "superw/enveloping.hpp"
#include "superw/tensor.hpp"

namespace superw {

using json = nlohmann::json;

/// Report and dump documents carry this schema tag.
inline constexpr const char* kSchemaVersion = "superw/1";

// Element documents:
//   UEAElement    {"terms": [{"monomial": M, "num": "p", "den": "q"}, ...]}
//   TensorElement {"terms": [{"factors": [M, ...], "num": "p", "den": "q"}, ...]}
//   LieElement    {"terms": [{"row": r, "col": c, "num": "p", "den": "q"}, ...]}
// where a monomial M is [[row-label, col-label, exponent], ...] in PBW order.

json monomial_to_json(const PBWMonomial& m, const EnvelopingAlgebra& algebra);
PBWMonomial monomial_from_json(const json& j, const EnvelopingAlgebra& algebra);

json to_json(const UEAElement& x, const EnvelopingAlgebra& algebra);
UEAElement uea_from_json(const json& j, const EnvelopingAlgebra& algebra);

json to_json(const TensorElement& x, const TensorPowerAlgebra& algebra);
TensorElement tensor_from_json(const json& j, const TensorPowerAlgebra& algebra);

json to_json(const LieElement& x, const LieSuperalgebra& lie);

}  // namespace superw
