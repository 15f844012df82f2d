#include "jptri/serialize.hpp"

namespace jptri {

namespace {

nlohmann::json term_to_json(const TermKey& key, const Scalar& c) {
  nlohmann::json t;
  t["l"] = key.l;
  t["m"] = key.m;
  if (c.is_exact()) {
    t["coeff_num"] = c.rational().get_num().get_str();
    t["coeff_den"] = c.rational().get_den().get_str();
  } else {
    t["coeff"] = c.to_double();
  }
  return t;
}

Scalar term_from_json(const nlohmann::json& t) {
  if (t.contains("coeff_num")) {
    return Scalar(rational_from_string(t.at("coeff_num").get<std::string>() + "/" +
                                       t.at("coeff_den").get<std::string>()));
  }
  return Scalar::real(t.at("coeff").get<double>());
}

template <class Poly>
nlohmann::json poly_to_json(const Poly& p, const char* basis) {
  nlohmann::json j;
  j["basis"] = basis;
  j["degree"] = p.total_degree();
  j["terms"] = nlohmann::json::array();
  for (const auto& [key, c] : p.terms()) {
    j["terms"].push_back(term_to_json(key, c));
  }
  return j;
}

template <class Poly>
Poly poly_from_json(const nlohmann::json& j, const char* basis) {
  if (j.at("basis").get<std::string>() != basis) {
    throw std::invalid_argument("polynomial JSON: wrong basis tag");
  }
  Poly p(j.at("degree").get<int>());
  for (const auto& t : j.at("terms")) {
    p.set_coeff(t.at("l").get<int>(), t.at("m").get<int>(), term_from_json(t));
  }
  return p;
}

template <class MeasureReport>
nlohmann::json measure_report_to_json(const MeasureReport& mr) {
  nlohmann::json j;
  j["measure"] = mr.measure;
  j["pairs"] = nlohmann::json::array();
  for (const auto& e : mr.entries) {
    nlohmann::json p;
    p["l"] = e.l;
    p["m"] = e.m;
    p["in_set"] = e.in_set;
    p["residual"] = scalar_to_json(e.residual);
    j["pairs"].push_back(std::move(p));
  }
  j["pass"] = mr.pass;
  return j;
}

}  // namespace

nlohmann::json scalar_to_json(const Scalar& s) {
  if (s.is_exact()) return rational_to_string(s.rational());
  return s.to_double();
}

nlohmann::json to_json(const BaryPoly& p) { return poly_to_json(p, "bary"); }
nlohmann::json to_json(const MonoPoly& p) { return poly_to_json(p, "mono"); }

BaryPoly bary_poly_from_json(const nlohmann::json& j) {
  return poly_from_json<BaryPoly>(j, "bary");
}

MonoPoly mono_poly_from_json(const nlohmann::json& j) {
  return poly_from_json<MonoPoly>(j, "mono");
}

nlohmann::json to_json(const OrthogonalityReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& mr : report.measures) arr.push_back(measure_report_to_json(mr));
  return arr;
}

nlohmann::json to_json(const HpReport& report) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& mr : report.measures) arr.push_back(measure_report_to_json(mr));
  return arr;
}

}  // namespace jptri
