#include "skein/serde.hpp"

namespace skein {

Json ring_to_json(const RingElem& r, const std::string& var) {
  Json j;
  j["var"] = var;
  Json terms = Json::array();
  for (const auto& [exp, coeff] : r.terms()) terms.push_back(Json::array({exp, coeff.get_str()}));
  j["terms"] = std::move(terms);
  return j;
}

RingElem ring_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms"))
    throw SkeinError("bad_ring", "ring element needs a terms array");
  RingElem r;
  for (const auto& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 2)
      throw SkeinError("bad_ring", "each term must be [exp, coeff]");
    const int exp = t[0].get<int>();
    mpz_class coeff;
    if (t[1].is_string())
      coeff = mpz_class(t[1].get<std::string>());
    else
      coeff = mpz_class(t[1].get<long>());
    r += RingElem::monomial(exp, coeff);
  }
  return r;
}

Json diagram_to_json(const Diagram& d) { return Json::parse(serialize(d)); }

Json report_to_json(const Report& r) {
  Json j;
  j["ok"] = r.ok;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["ok"] = c.ok;
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace skein
