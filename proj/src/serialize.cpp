#include "lincomp/serialize.hpp"

#include "lincomp/error.hpp"

namespace lincomp {

json to_json(const ModelSpec& m) { return json::parse(format_model(m)); }

json to_json(const ParamBijection& phi) {
  json out = json::array();
  for (const auto& [from, to] : phi.mapping()) out.push_back({from.symbol(), to.symbol()});
  return out;
}

ParamBijection bijection_from_json(const json& j) {
  if (!j.is_array()) throw ParseError("bijection must be an array of pairs", 0);
  std::map<Param, Param> m;
  for (const json& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string()) {
      throw ParseError("bijection entries must be [\"a_from\", \"a_to\"] pairs", 0);
    }
    const Param from = Param::parse(pair[0].get<std::string>());
    if (!m.emplace(from, Param::parse(pair[1].get<std::string>())).second) {
      throw ParseError("parameter " + from.symbol() + " mapped twice", 0);
    }
  }
  return ParamBijection(std::move(m));
}

namespace {

json operator_terms(const OperatorPoly& op) {
  json out = json::array();
  for (int k = op.degree(); k >= 0; --k) {
    const MPoly c = op.coefficient(k);
    if (!c.is_zero()) out.push_back({{"order", k}, {"coefficient", c.to_string()}});
  }
  return out;
}

json key_json(const CoefficientKey& k) {
  return {{"equation", k.equation},
          {"signal", k.monomial.signal == Signal::Output ? "y" : "u"},
          {"compartment", k.monomial.compartment},
          {"order", k.monomial.order},
          {"label", k.to_string()}};
}

}  // namespace

json to_json(const IoEquation& eq) {
  json rhs = json::array();
  for (const auto& [in, op] : eq.rhs) rhs.push_back({{"input", in}, {"terms", operator_terms(op)}});
  return {{"output", eq.output},
          {"subgraph", eq.subgraph},
          {"lhs", operator_terms(eq.lhs)},
          {"rhs", rhs},
          {"text", render_equation(eq)}};
}

json to_json(const CoefficientMap& c) {
  json out = json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    json entry = key_json(c.entries[k].key);
    entry["symbol"] = "c" + std::to_string(k + 1);
    entry["value"] = c.entries[k].value.to_string();
    out.push_back(std::move(entry));
  }
  return out;
}

json to_json(const StructureSignature& s) {
  json out = json::array();
  for (const CoefficientKey& k : s.support) out.push_back(k.to_string());
  return out;
}

json to_json(const RuleReport& r) {
  json rules = json::array();
  for (const RuleOutcome& o : r.rules) {
    rules.push_back({{"rule", o.rule}, {"name", o.name}, {"pass", o.pass}, {"a", o.left},
                     {"b", o.right}});
  }
  return {{"pass", r.pass()}, {"rules", rules}};
}

json to_json(const RhsCount& c) {
  return {{"input", c.input}, {"output", c.output}, {"count", c.count},
          {"reachable", c.reachable}};
}

json to_json(const Verdict& v) {
  json out = {{"kind", to_string(v.kind)}};
  if (v.kind == VerdictKind::Distinguishable) out["reason"] = to_string(v.reason);
  if (v.signature_a) out["signature_a"] = to_json(*v.signature_a);
  if (v.signature_b) out["signature_b"] = to_json(*v.signature_b);
  if (v.rules) out["rules"] = to_json(*v.rules);
  if (v.relation) {
    out["relation"] = {{"owner", v.relation->owner},
                       {"relation", v.relation->relation.to_string()},
                       {"residue", v.relation->residue.to_string()}};
  }
  if (v.phi) out["phi"] = to_json(*v.phi);
  out["notes"] = v.notes;
  return out;
}

json to_json(const IdentifiabilityResult& r) {
  return {{"verdict", r.identifiable ? "generically-locally-identifiable" : "unidentifiable"},
          {"rank", r.rank},
          {"param_count", r.param_count},
          {"coefficient_count", r.coefficient_count},
          {"sample_points_used", r.sample_points_used},
          {"sample_ranks", r.sample_ranks}};
}

json to_json(const SkeletalPathWitness& w) {
  json out = {{"path", w.path}, {"pattern", to_string(w.pattern)}};
  if (w.detour) {
    out["detour"] = {{"i", w.detour->i}, {"j", w.detour->j}, {"s", w.detour->s},
                     {"t", w.detour->t}, {"vertices", w.detour->vertices}};
  }
  return out;
}

}  // namespace lincomp
