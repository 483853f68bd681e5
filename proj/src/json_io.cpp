#include "plint/json_io.hpp"

#include "plint/errors.hpp"

namespace plint {

nlohmann::ordered_json to_json(const ClosedForm& f) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const Term& t : f.terms()) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const Factor& fac : t.factors) {
      nlohmann::ordered_json jf;
      jf["kind"] = std::string(kind_name(fac.atom.kind()));
      jf["args"] = fac.atom.args();
      jf["exp"] = fac.exp;
      factors.push_back(std::move(jf));
    }
    nlohmann::ordered_json jt;
    jt["coeff"] = t.coeff.to_fraction_string();
    jt["factors"] = std::move(factors);
    terms.push_back(std::move(jt));
  }
  nlohmann::ordered_json out;
  out["terms"] = std::move(terms);
  return out;
}

std::string serialize(const ClosedForm& f) { return to_json(f).dump(); }

ClosedForm closed_form_from_json(const nlohmann::ordered_json& j) {
  try {
    std::vector<Term> terms;
    for (const auto& jt : j.at("terms")) {
      Term t{Rational::parse(jt.at("coeff").get<std::string>()), {}};
      for (const auto& jf : jt.at("factors")) {
        const Atom a = Atom::make(kind_from_name(jf.at("kind").get<std::string>()),
                                  jf.at("args").get<std::vector<int>>());
        t.factors.push_back({a, jf.at("exp").get<int>()});
      }
      terms.push_back(std::move(t));
    }
    return ClosedForm::from_terms(terms);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("malformed closed form JSON: ") + e.what());
  }
}

ClosedForm parse_closed_form(const std::string& text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return closed_form_from_json(j);
}

}  // namespace plint
