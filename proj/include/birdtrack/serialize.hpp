#pragma once

#include "birdtrack/algebra.hpp"
#include "birdtrack/projectors.hpp"
#include "birdtrack/symbolic.hpp"
#include "birdtrack/tableau.hpp"
#include "birdtrack/verify.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace birdtrack {

using json = nlohmann::ordered_json;

// Numerators and denominators are decimal strings so that arbitrarily large
// rationals survive any JSON reader.

inline json rational_to_json(const Rational& q) {
  return {{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

inline Rational rational_from_json(const json& j) {
  const auto num = j.at("num").get<std::string>();
  const auto den = j.at("den").get<std::string>();
  return parse_rational(num + "/" + den);
}

inline json to_json(const AlgebraElement& x) {
  json terms = json::array();
  for (const auto& t : x.terms()) {
    json term = {{"perm", t.perm.to_string()}};
    term.update(rational_to_json(t.coeff));
    terms.push_back(std::move(term));
  }
  return {{"degree", x.degree()}, {"terms", std::move(terms)}};
}

inline AlgebraElement algebra_from_json(const json& j) {
  const auto n = j.at("degree").get<std::size_t>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({Permutation::parse(t.at("perm").get<std::string>(), n), rational_from_json(t)});
  return AlgebraElement::from_terms(n, std::move(terms));
}

inline json to_json(const SetFactor& f) {
  return {{"kind", std::string(1, kind_letter(f.kind()))}, {"blocks", f.blocks()}};
}

inline SetFactor set_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind != "S" && kind != "A") throw std::invalid_argument("set kind must be \"S\" or \"A\"");
  return SetFactor(kind == "S" ? SetKind::sym : SetKind::anti, j.at("blocks").get<Grid>());
}

inline json to_json(const SymbolicOperator& x, std::optional<Method> method = std::nullopt) {
  json factors = json::array();
  for (const auto& f : x.factors())
    if (!f.empty()) factors.push_back(to_json(f));
  json j = {{"degree", x.degree()}, {"scalar", rational_to_json(x.scalar())}, {"factors", factors}};
  if (method) j["method"] = to_string(*method);
  return j;
}

inline SymbolicOperator symbolic_from_json(const json& j) {
  std::vector<SetFactor> factors;
  for (const auto& f : j.at("factors")) factors.push_back(set_from_json(f));
  return SymbolicOperator(j.at("degree").get<std::size_t>(), rational_from_json(j.at("scalar")),
                          std::move(factors));
}

inline json to_json(const YoungTableau& t) {
  return {{"tableau", t.to_string()}, {"rows", t.rows()}, {"shape", t.shape()}};
}

inline YoungTableau tableau_from_json(const json& j) {
  if (j.contains("rows")) return YoungTableau::validate(j.at("rows").get<Grid>());
  return YoungTableau::parse(j.at("tableau").get<std::string>());
}

inline json to_json(const VerificationReport& r) {
  json j = {{"identity", r.identity},
            {"scope", {{"n", r.scope.n}, {"tableaux", r.scope.tableaux}}},
            {"passed", r.passed}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  if (!r.evidence.empty()) {
    json ev = json::array();
    for (const auto& e : r.evidence) ev.push_back(to_json(e));
    j["evidence"] = std::move(ev);
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.identity = j.at("identity").get<std::string>();
  r.scope.n = j.at("scope").at("n").get<std::size_t>();
  r.scope.tableaux = j.at("scope").at("tableaux").get<std::vector<std::string>>();
  r.passed = j.at("passed").get<bool>();
  if (j.contains("witness")) r.witness = algebra_from_json(j.at("witness"));
  if (j.contains("evidence"))
    for (const auto& e : j.at("evidence")) r.evidence.push_back(algebra_from_json(e));
  if (j.contains("detail")) r.detail = j.at("detail").get<std::string>();
  if (r.passed == r.witness.has_value())
    throw std::invalid_argument("report must carry a witness exactly when it failed");
  return r;
}

}  // namespace birdtrack
