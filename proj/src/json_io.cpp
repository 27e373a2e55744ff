#include "h2u/json_io.hpp"

#include <limits>

#include "h2u/errors.hpp"

namespace h2u {

namespace {

Json integer_cell(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_cell(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvalidParameterError("malformed integer cell");
}

Json pair_list(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& r : v) a.push_back(rational_json(r));
  return a;
}

}  // namespace

Json rational_json(const Rational& r) {
  return Json::array({integer_cell(numerator(r)), integer_cell(denominator(r))});
}

Rational rational_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw InvalidParameterError("malformed rational");
  return Rational(integer_from_cell(j[0]), integer_from_cell(j[1]));
}

Json table_json(const CorrectionTable& t) {
  return Json{{"p", t.p}, {"q", t.q}, {"labeled", t.labeled}, {"d", pair_list(t.d)}};
}

Json witness_json(const BergeWitness& w) {
  Json j{{"family", to_string(w.family)}, {"k", w.k}, {"ksq_sign", w.ksq_sign}};
  if (const auto* p = std::get_if<FamilyIParams>(&w.params)) {
    j["i"] = p->i;
    j["sign"] = p->sign;
    j["gcd"] = p->gcd_value;
  } else if (const auto* p = std::get_if<FamilyEpsDParams>(&w.params)) {
    j["epsilon"] = p->epsilon;
    j["d"] = p->d;
    j["outer_sign"] = p->outer_sign;
  } else if (const auto* p = std::get_if<FamilyVParams>(&w.params)) {
    j["sign1"] = p->sign1;
    j["sign2"] = p->sign2;
  } else if (const auto* p = std::get_if<FamilyQuadraticParams>(&w.params)) {
    j["j"] = p->j;
  }
  return j;
}

Json berge_report_json(std::int64_t alpha, std::int64_t beta,
                       const std::vector<BergeWitness>& witnesses) {
  Json ws = Json::array();
  for (const auto& w : witnesses) ws.push_back(witness_json(w));
  return Json{{"alpha", alpha}, {"beta", beta}, {"witnesses", ws}};
}

Json matching_json(const MatchingReport& r) {
  Json pairs = Json::array();
  for (const auto& [eps, u] : r.feasible_pairs)
    pairs.push_back(Json{{"epsilon", eps}, {"u", u}});
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) {
    Json j{{"epsilon", d.epsilon},
           {"u", d.u},
           {"I", pair_list(d.I)},
           {"first_failure", to_string(d.first_failure)}};
    j["failure_index"] = d.failure_index ? Json(*d.failure_index) : Json(nullptr);
    diags.push_back(j);
  }
  return Json{{"p", r.p},
              {"q", r.q},
              {"feasible", r.feasible},
              {"feasible_pairs", pairs},
              {"diagnostics", diags}};
}

Json transfer_json(const TransferReport& r, std::int64_t tangle_upper,
                   const std::optional<std::int64_t>& exact) {
  Json cert = Json::array();
  for (const auto& e : r.certificate)
    cert.push_back(Json{{"epsilon", e.epsilon}, {"u", e.u}, {"status", to_string(e.status)}});
  return Json{{"p", r.p},
              {"q", r.q},
              {"assumption", to_string(r.assumption)},
              {"conclusion", to_string(r.conclusion)},
              {"certificate", cert},
              {"tangle_upper", tangle_upper},
              {"exact", exact ? Json(*exact) : Json(nullptr)}};
}

Json composite_json(const CompositeVerdict& v) {
  Json witness;
  witness["case_a"] = v.case_a ? Json{{"swapped", v.case_a->swapped}} : Json(nullptr);
  witness["case_b"] = v.case_b ? Json{{"swapped", v.case_b->swapped},
                                      {"v", v.case_b->v},
                                      {"epsilon", v.case_b->epsilon},
                                      {"a", v.case_b->a},
                                      {"b", v.case_b->b}}
                               : Json(nullptr);
  return Json{{"u2_is_one", v.u2_is_one}, {"case", to_string(v.kind)}, {"witness", witness}};
}

Json classification_json(const U2Classification& c) {
  Json j{{"p", c.link.p},
         {"q", c.link.q},
         {"lower", c.lower},
         {"upper", c.upper},
         {"provenance", c.provenance}};
  j["exact"] = c.exact ? Json(*c.exact) : Json(nullptr);
  return j;
}

U2Classification classification_from_json(const Json& j) {
  U2Classification c;
  c.link.p = j.at("p").get<std::int64_t>();
  c.link.q = j.at("q").get<std::int64_t>();
  c.lower = j.at("lower").get<std::int64_t>();
  c.upper = j.at("upper").get<std::int64_t>();
  if (!j.at("exact").is_null()) c.exact = j.at("exact").get<std::int64_t>();
  c.provenance = j.at("provenance").get<std::vector<std::string>>();
  return c;
}

std::string dump_line(const Json& j) { return j.dump(); }

std::string dump_pretty(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace h2u
