#include "qtor/error.hpp"
#include "qtor/json_io.hpp"

namespace qtor {

using nlohmann::json;

json poly_to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) {
    json ex = json::array();
    for (int k = 0; k < p.nvars(); ++k) ex.push_back(e[k]);
    terms.push_back({{"coeff", rational_to_string(c)}, {"exp", ex}});
  }
  return terms;
}

MultiPoly poly_from_json(const json& j, int nvars) {
  if (!j.is_array()) throw PreconditionError("polynomial terms must be a JSON array");
  MultiPoly p(nvars);
  for (const auto& t : j) {
    const auto& ex = t.at("exp");
    if (!ex.is_array() || static_cast<int>(ex.size()) != nvars)
      throw PreconditionError("exponent vector length does not match the rank");
    Exponent e{};
    for (int k = 0; k < nvars; ++k) {
      int v = ex[k].get<int>();
      if (v < 0) throw PreconditionError("negative exponent in polynomial term");
      e[k] = static_cast<std::uint16_t>(v);
    }
    p.add_term(e, parse_rational(t.at("coeff").get<std::string>()));
  }
  return p;
}

json rr_to_json(const RootRational& a) {
  json factors = json::array();
  for (const auto& [r, e] : a.root_factors()) factors.push_back({{"root", r.coords()}, {"exp", e}});
  return {{"unit", rational_to_string(a.unit())},
          {"root_factors", factors},
          {"num_terms", poly_to_json(a.residual_num())},
          {"den_terms", poly_to_json(a.residual_den())}};
}

RootRational rr_from_json(const json& j, FieldPtr f) {
  const int n = f->nvars();
  try {
    Rational unit = parse_rational(j.at("unit").get<std::string>());
    std::map<Root, int> factors;
    for (const auto& rf : j.at("root_factors")) {
      auto coords = rf.at("root").get<std::vector<int>>();
      if (static_cast<int>(coords.size()) != n) throw PreconditionError("root length does not match the rank");
      factors[Root::from_coords(coords)] += rf.at("exp").get<int>();
    }
    MultiPoly num = j.contains("num_terms") ? poly_from_json(j["num_terms"], n) : MultiPoly::constant(n, 1);
    MultiPoly den = j.contains("den_terms") ? poly_from_json(j["den_terms"], n) : MultiPoly::constant(n, 1);
    if (unit == 0 || num.is_zero()) return RootRational::zero(f);
    return RootRational::from_parts(f, unit, factors, num, den);
  } catch (const json::exception& e) {
    throw PreconditionError(std::string("malformed RootRational JSON: ") + e.what());
  }
}

}  // namespace qtor
