#pragma once

// JSON views of library values. Big integers are always decimal strings.

#include <json.hpp>

#include "ordco/coincidence.hpp"
#include "ordco/factorization.hpp"
#include "ordco/geometry.hpp"
#include "ordco/recovery.hpp"

namespace ordco {

using Json = nlohmann::json;

inline Json degrees_json(const DegreeMultiset& d) { return Json(d.values); }

inline Json prime_power_json(const PrimePower& pp) {
  return {{"prime", to_string(pp.prime)}, {"exponent", pp.exponent}, {"value", to_string(pp.value())}};
}

inline Json factorization_json(const Factorization& f) {
  Json factors = Json::array();
  for (const auto& [p, e] : f.factors) factors.push_back({{"prime", to_string(p)}, {"exponent", e}});
  return {{"value", to_string(f.value)}, {"factors", factors}, {"text", f.to_string()}};
}

inline Json candidate_json(const RecoveryCandidate& c) {
  Json j = {{"group", c.group.to_string()}};
  j["q"] = c.field ? Json(to_string(c.field->q())) : Json(nullptr);
  return j;
}

inline Json word_json(const GeneratorWord& w) {
  Json exps = Json::object();
  for (const auto& [id, k] : w.exponents()) exps[id.to_string()] = k;
  return {{"word", w.to_string()}, {"exponents", exps}};
}

inline Json class_json(const CoincidenceClass& c) {
  const auto l = c.left(), r = c.right();
  return {{"pair", c.to_string()},
          {"left", l.to_string()},
          {"right", r.to_string()},
          {"rank", l.rank()},
          {"max_degree", c.max_degree()}};
}

inline Json contribution_row_json(const ContributionRow& r) {
  Json j = {{"type", r.type.to_string()},
            {"q", to_string(r.q)},
            {"characteristic", prime_power_json(r.characteristic_part)},
            {"largest", prime_power_json(r.largest)},
            {"predicted_counterexample", r.predicted_counterexample},
            {"consistent", r.consistent()}};
  j["second"] = r.second ? prime_power_json(*r.second) : Json(nullptr);
  return j;
}

inline Json triple_json(const TransitiveTriple& t) {
  Json j = {{"ambient", t.ambient.to_string()},
            {"sub1", t.sub1.to_string()},
            {"sub2", t.sub2.to_string()},
            {"intersection", t.intersection.to_string()},
            {"family", t.family}};
  j["n"] = t.n ? Json(*t.n) : Json(nullptr);
  j["split"] = {{"ambient", split_form(t.ambient).to_string()},
                {"sub1", split_form(t.sub1).to_string()},
                {"sub2", split_form(t.sub2).to_string()},
                {"intersection", split_form(t.intersection).to_string()}};
  j["class"] = triple_to_class(t).to_string();
  return j;
}

}  // namespace ordco
