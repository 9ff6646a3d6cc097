#include "thetaorb/json_io.hpp"

#include <stdexcept>

namespace thetaorb {

namespace {

Json evidence_json(const std::vector<Evidence>& ev) {
  Json a = Json::array();
  for (const auto& e : ev) a.push_back({{"factor", e.factor}, {"clause", e.clause}, {"holds", e.holds}});
  return a;
}

std::vector<Evidence> evidence_from(const Json& a) {
  std::vector<Evidence> out;
  for (const auto& e : a) out.push_back({e.at("factor").get<std::string>(), e.at("clause").get<std::string>(), e.at("holds").get<bool>()});
  return out;
}

Json pair_json(const BdPair& p) { return Json::array({p.q1, p.q2}); }

Json opt_bool(const std::optional<bool>& b) { return b ? Json(*b) : Json(nullptr); }

}  // namespace

Json to_json(const Partition& p) { return Json(p.parts()); }

Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

Json to_json(const Verdict& v) {
  Json j;
  j["quasi_admissible"] = v.quasiAdmissible;
  j["raisable"] = to_string(v.raisable);
  j["contract_violation"] = v.contract_violation();
  j["quasi_evidence"] = evidence_json(v.quasiEvidence);
  j["raise_evidence"] = evidence_json(v.raiseEvidence);
  return j;
}

Verdict verdict_from_json(const Json& j) {
  Verdict v;
  v.quasiAdmissible = j.at("quasi_admissible").get<bool>();
  const std::string r = j.at("raisable").get<std::string>();
  if (r == "yes") v.raisable = Raisability::Raisable;
  else if (r == "no_by_criterion") v.raisable = Raisability::NotRaisableByCriterion;
  else if (r == "not_applicable") v.raisable = Raisability::NotApplicable;
  else throw std::invalid_argument("unknown raisability '" + r + "'");
  v.quasiEvidence = evidence_from(j.at("quasi_evidence"));
  v.raiseEvidence = evidence_from(j.at("raise_evidence"));
  return v;
}

Json to_json(const ThetaOrbitResult& r) {
  Json j;
  if (r.exceptional) j["orbit"] = r.label;
  else j["orbit"] = to_json(r.orbit);
  j["label"] = r.label;
  j["effective_degree"] = r.effectiveDegree;
  j["via_closed_form"] = r.viaClosedForm;
  j["verdict"] = r.verdict ? to_json(*r.verdict) : Json(nullptr);
  if (r.leviRegular) j["levi_regular"] = {{"factors", r.leviRegular->factors}, {"text", r.leviRegular->str()}};
  else j["levi_regular"] = nullptr;
  return j;
}

Json to_json(const ThetaPropertyReport& r) {
  Json j;
  j["result"] = to_json(r.result);
  j["quasi_admissible"] = r.quasiAdmissible;
  j["not_raisable"] = r.notRaisable;
  j["persistent"] = r.persistent;
  j["ok"] = r.ok();
  j["messages"] = r.messages;
  return j;
}

Json to_json(const SubsystemReport& r, const RootSystemData& rs) {
  Json j;
  j["components"] = r.str();
  Json comps = Json::array();
  for (const auto& c : r.components) {
    Json simple = Json::array();
    for (int s : c.simpleRoots) simple.push_back(std::vector<std::int64_t>(rs.root_coeffs().col(s).data(), rs.root_coeffs().col(s).data() + rs.rank()));
    comps.push_back({{"label", c.label.str()}, {"roots", c.roots.size()}, {"simple_roots", simple}});
  }
  j["factors"] = comps;
  j["num_roots"] = r.memberRoots.size();
  j["positive_roots"] = r.memberRoots.size() / 2;
  j["span_closed"] = r.spanClosed;
  return j;
}

Json to_json(const PseudoLeviPair& p) {
  return {{"source_dual_type", std::string(1, to_char(p.sourceDualType))}, {"rank", p.rank}, {"p1", to_json(p.p1)}, {"p2", to_json(p.p2)}};
}

Json to_json(const DualityTrace& t, const RootSystemData& dual) {
  Json j;
  Json nu = Json::array();
  for (Eigen::Index i = 0; i < t.nu.size(); ++i) nu.push_back(to_string(t.nu(i)));
  j["nu"] = nu;
  j["integral_subsystem"] = to_json(t.integral, dual);
  Json f = Json::array();
  for (const auto& c : t.factors) f.push_back(c.str());
  j["levi_factors"] = f;
  j["pair"] = to_json(t.pair);
  j["orbit"] = to_json(t.orbit);
  return j;
}

Json to_json(const CCoefficientAudit& a) {
  Json j;
  j["r"] = a.r;
  j["n"] = a.n;
  j["n_alpha"] = a.nAlpha;
  j["lambda"] = to_json(a.lambda);
  j["quotient_size"] = a.quotientSize;
  j["c"] = a.value;
  j["lhs"] = a.lhs;
  j["rhs"] = a.rhs;
  Json table = Json::array();
  for (const auto& [mu, d] : a.dimTable) table.push_back({{"mu", to_json(mu)}, {"dim_wh", d}});
  j["dim_table"] = table;
  return j;
}

Json to_json(const ExceptionalOrbitRecord& r) {
  Json j;
  j["group"] = r.group;
  j["orbit"] = r.orbit;
  j["special"] = opt_bool(r.special);
  j["even"] = opt_bool(r.even);
  j["stabilizer"] = r.stabilizerDer;
  Json f = Json::array();
  for (const auto& p : r.factors) f.push_back(pair_json(p));
  j["factors"] = f;
  j["tau"] = r.tau ? pair_json(*r.tau) : Json(nullptr);
  j["quasi_adm"] = r.printedQuasiAdm.text();
  j["raisable"] = r.printedRaisable.text();
  j["source"] = r.source;
  return j;
}

Json to_json(const ThetaTableRecord& r) {
  Json j;
  j["group"] = r.group;
  j["n"] = r.nValues;
  j["n_from"] = r.nFrom ? Json(*r.nFrom) : Json(nullptr);
  j["phi"] = r.phiNu;
  if (!r.phiNuErrata.empty()) j["phi_errata"] = r.phiNuErrata;
  j["j"] = r.jInductionLabel;
  j["orbit"] = r.orbit;
  j["dim"] = r.dimension;
  j["levi_regular"] = r.leviRegular;
  return j;
}

}  // namespace thetaorb
