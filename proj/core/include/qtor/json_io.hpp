#pragma once

#include <json.hpp>

#include "qtor/cartan.hpp"
#include "qtor/poly.hpp"
#include "qtor/root_rational.hpp"

namespace qtor {

// {"unit":"p/q","root_factors":[{"root":[..],"exp":k}],
//  "num_terms":[{"coeff":"p/q","exp":[..]}],"den_terms":[...]}
nlohmann::json rr_to_json(const RootRational& a);
RootRational rr_from_json(const nlohmann::json& j, FieldPtr f);

nlohmann::json poly_to_json(const MultiPoly& p);
MultiPoly poly_from_json(const nlohmann::json& j, int nvars);

}  // namespace qtor
