#include "eorlicz/report_json.hpp"

namespace eorlicz {

Json ext_json(ExtReal x) {
  if (x.is_inf()) return Json("inf");
  return Json(x.value());
}

Json json_of(const Verdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  Json evidence = Json::array();
  for (const Evidence& e : v.evidence) {
    Json item;
    item["description"] = e.description;
    Json witness = Json::array();
    for (ExtReal w : e.witness) witness.push_back(ext_json(w));
    item["witness"] = witness;
    evidence.push_back(item);
  }
  j["evidence"] = evidence;
  return j;
}

Json json_of(const CheckConfig& cfg) {
  Json j;
  j["u_grid"] = cfg.u_grid;
  j["t_samples"] = cfg.t_samples;
  j["ladder_ratio"] = cfg.ladder_ratio;
  j["tol_convex"] = cfg.tol_convex;
  j["tol_zero_limit"] = cfg.tol_zero_limit;
  j["big_M"] = cfg.big_m;
  j["max_ladder"] = cfg.max_ladder;
  return j;
}

Json json_of(const ClassificationReport& report) {
  Json j;
  Json classes;
  for (EClass c : kClassChain) {
    const ClassOutcome& outcome = report.classes[static_cast<int>(c)];
    Json cls;
    cls["status"] = to_string(outcome.status);
    Json per_t = Json::array();
    for (Status s : outcome.per_t) per_t.push_back(to_string(s));
    cls["per_t"] = per_t;
    cls["conditions"] = class_conditions(c);
    classes[to_string(c)] = cls;
  }
  j["classes"] = classes;
  j["consistent"] = report.consistent;
  Json samples = Json::array();
  for (const TSampleReport& sample : report.samples) {
    Json s;
    s["t"] = sample.t;
    Json conditions;
    for (const auto& [name, verdict] : sample.conditions) {
      conditions[name] = json_of(verdict);
    }
    s["conditions"] = conditions;
    s["U_phi"] = sample.u_phi_known ? ext_json(sample.u_phi) : Json();
    s["a_phi"] = sample.a_phi_known ? ext_json(sample.a_phi) : Json();
    s["nondegenerate_strict"] = sample.nondegenerate_strict;
    samples.push_back(s);
  }
  j["samples"] = samples;
  j["config"] = json_of(report.config);
  return j;
}

Json json_of(const NormResult& result, const CheckConfig& cfg) {
  Json j;
  j["value"] = ext_json(result.value);
  j["iterations"] = result.iterations;
  j["bracket"] = Json::array({result.bracket.first, result.bracket.second});
  j["modular_at_value"] = ext_json(result.modular_at_value);
  j["config"] = json_of(cfg);
  return j;
}

Json json_of(const SobolevResult& result, int order, const CheckConfig& cfg) {
  Json j;
  j["value"] = ext_json(result.value);
  j["order"] = order;
  Json terms = Json::array();
  for (ExtReal t : result.terms) terms.push_back(ext_json(t));
  j["terms"] = terms;
  j["config"] = json_of(cfg);
  return j;
}

Json json_of(const FixtureReport& report, bool include_details) {
  Json j;
  j["name"] = report.name;
  j["status"] = to_string(report.status);
  j["expected_dispute"] = report.expected_dispute;
  Json claims = Json::array();
  for (const ClaimCheck& cc : report.checks) {
    Json c;
    c["class"] = to_string(cc.cls);
    c["map"] = cc.with_identity ? "identity" : "fixture";
    c["expected"] = to_string(cc.expected);
    c["observed"] = to_string(cc.observed);
    c["ok"] = cc.ok;
    claims.push_back(c);
  }
  j["claims"] = claims;
  Json observed;
  for (EClass c : kClassChain) {
    observed[to_string(c)] = to_string(report.with_map.class_status(c));
  }
  j["observed"] = observed;
  Json observed_id;
  for (EClass c : kClassChain) {
    observed_id[to_string(c)] = to_string(report.with_identity.class_status(c));
  }
  j["observed_identity"] = observed_id;
  if (include_details) {
    j["with_map"] = json_of(report.with_map);
    j["with_identity"] = json_of(report.with_identity);
  }
  return j;
}

Json json_of(const CatalogReport& report) {
  Json j;
  Json fixtures = Json::array();
  for (const FixtureReport& fr : report.fixtures) {
    fixtures.push_back(json_of(fr, /*include_details=*/false));
  }
  j["fixtures"] = fixtures;
  Json summary;
  summary["chain_consistent"] = report.summary.chain_consistent;
  Json separations = Json::array();
  for (const SeparationWitness& w : report.summary.separations) {
    Json s;
    s["certified"] = to_string(w.weaker);
    s["refuted"] = to_string(w.stronger);
    s["fixture"] = w.fixture;
    s["ok"] = w.ok;
    separations.push_back(s);
  }
  summary["separations"] = separations;
  summary["confirmed"] = report.summary.confirmed;
  summary["disputed"] = report.summary.disputed;
  summary["inconclusive"] = report.summary.inconclusive;
  summary["disputes_expected"] = report.summary.disputes_expected;
  j["summary"] = summary;
  return j;
}

Json json_of(const ClosureReport& report) {
  auto entry_json = [](const ClosureEntry& e) {
    Json j;
    j["construction"] = e.construction;
    j["detail"] = e.detail;
    j["class"] = to_string(e.cls);
    j["expected"] = to_string(e.expected);
    j["observed"] = to_string(e.observed);
    j["ok"] = e.ok;
    return j;
  };
  Json j;
  Json entries = Json::array();
  for (const ClosureEntry& e : report.entries) entries.push_back(entry_json(e));
  j["entries"] = entries;
  Json exceptions = Json::array();
  for (const ClosureEntry& e : report.exceptions) exceptions.push_back(entry_json(e));
  j["exceptions"] = exceptions;
  j["all_ok"] = report.all_ok;
  j["exceptions_as_documented"] = report.exceptions_as_documented;
  return j;
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace eorlicz
