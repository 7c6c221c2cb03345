#pragma once

#include <json.hpp>

#include <string>

#include "bounds.hpp"
#include "enumerate.hpp"
#include "instance.hpp"
#include "integer.hpp"
#include "lemma_lab.hpp"

namespace texp {

using Json = nlohmann::ordered_json;

// Native number when it fits in 63 bits, decimal string otherwise.
inline Json int_json(const Int& v) {
  if (fits_i64(v)) return Json(mpz_get_si(v.get_mpz_t()));
  return Json(to_dec(v));
}

inline Int json_int(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_unsigned()) return Int(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
  throw invalid_input("expected an integer, got " + j.dump());
}

inline Json to_json(const Solution& s) { return Json::array({s.x, s.y, s.z}); }
inline Json to_json(const CanonicalSolution& s) { return Json::array({s.X, s.Y, s.Z}); }

inline Solution solution_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw invalid_input("solution must be [x,y,z]: " + j.dump());
  return {j[0].get<std::uint64_t>(), j[1].get<std::uint64_t>(), j[2].get<std::uint64_t>()};
}

inline Json to_json(const LemmaCertificate& c) {
  Json j;
  j["lemma"] = c.lemma;
  j["verdict"] = c.verdict() ? "pass" : "fail";
  Json in = Json::object();
  for (const auto& [k, v] : c.inputs) in[k] = v;
  j["inputs"] = std::move(in);
  Json rec = Json::object();
  for (const auto& [k, v] : c.recomputed) rec[k] = v;
  j["recomputed"] = std::move(rec);
  Json cl = Json::array();
  for (const auto& c2 : c.clauses) cl.push_back({{"name", c2.name}, {"holds", c2.holds}, {"statement", c2.statement}});
  j["clauses"] = std::move(cl);
  return j;
}

inline Json to_json(const CanonicalForm& f) {
  return {{"A", int_json(f.A)}, {"B", int_json(f.B)}, {"C", int_json(f.C)}, {"lambda", f.lambda},
          {"perm", to_string(f.perm)}};
}

inline Json to_json(const OrderData& od) {
  return {{"Z1", od.Z1}, {"n1", od.n1}, {"delta1", od.delta1}, {"f", to_dec(od.f)}};
}

inline Json to_json(const BoundReport& r) {
  return {{"bound", int_json(r.bound)},
          {"max_base", int_json(r.max_base)},
          {"log_max", {r.log_max.lower().to_string(30, MPFR_RNDD), r.log_max.upper().to_string(30, MPFR_RNDU)}},
          {"formula_value",
           {r.formula_value.lower().to_string(20, MPFR_RNDD), r.formula_value.upper().to_string(20, MPFR_RNDU)}}};
}

inline Json to_json(const EnumerationStats& s) {
  return {{"candidates_examined", s.candidates_examined},
          {"candidates_surviving_sieve", s.candidates_surviving_sieve},
          {"exact_checks", s.exact_checks}};
}

inline Json to_json(const SolutionSet& s) {
  Json sols = Json::array();
  for (const auto& v : s.solutions) sols.push_back(to_json(v));
  return {{"a", int_json(s.instance.a())},
          {"b", int_json(s.instance.b())},
          {"c", int_json(s.instance.c())},
          {"cap", s.cap},
          {"N", s.solutions.size()},
          {"solutions", std::move(sols)},
          {"stats", to_json(s.stats)}};
}

inline Json to_json(const ThresholdTrace& t) {
  auto iv = [](const Interval& v) {
    return Json::array({v.lower().to_string(12, MPFR_RNDD), v.upper().to_string(12, MPFR_RNDU)});
  };
  return {{"label", t.label},       {"precision", t.precision},  {"t0", iv(t.t0)},
          {"F_at_t0", iv(t.F_at_t0)}, {"dF_at_t0", iv(t.dF_at_t0)}, {"monotone_from", iv(t.monotone_from)},
          {"holds", t.holds},       {"reason", t.reason}};
}

inline Json to_json(const CertificationReport& r) {
  Json sols = Json::array();
  for (const auto& s : r.solutions) sols.push_back(to_json(s));
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  Json j{{"form", to_json(r.form)}, {"solutions", std::move(sols)}};
  j["order_data"] = r.order ? to_json(*r.order) : Json(nullptr);
  j["certificates"] = std::move(certs);
  j["all_pass"] = r.all_pass();
  return j;
}

}  // namespace texp
