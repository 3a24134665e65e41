#pragma once

// JSON views of library objects. Big integers are emitted as decimal strings.

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "calex/cgroup.hpp"
#include "calex/covering.hpp"
#include "calex/lmodule.hpp"
#include "calex/zmodule.hpp"

namespace calex::json {

using json = nlohmann::ordered_json;

inline json big(const BigInt& v) { return v.get_str(); }

inline json bigs(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline json matrix(const IntMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    a.push_back(std::move(row));
  }
  return a;
}

inline json poly_matrix(const PolyMatrix& m) {
  json out = {{"cols", m.cols}, {"rows", to_strings(m)}};
  return out;
}

inline json group(const GroupInvariants& g) {
  return {{"invariant_factors", bigs(g.invariant_factors)}, {"free_rank", g.free_rank}};
}

inline json group(const FgAbelianGroup& g) {
  json out = group(GroupInvariants::of(g));
  const auto order = g.order();
  out["order"] = order ? json(order->get_str()) : json(nullptr);
  return out;
}

inline json fingerprint(const Fingerprint& fp) {
  json cok = json::object();
  for (const auto& [d, g] : fp.cokernels) cok[std::to_string(d)] = group(g);
  return {{"invariant_factors", bigs(fp.group.invariant_factors)},
          {"free_rank", fp.group.free_rank},
          {"t_order", fp.t_order},
          {"cokernels", cok},
          {"charpoly", to_string(fp.charpoly)}};
}

inline json derived(const DerivedModule& d) {
  const Fingerprint fp = fingerprint(d);
  json out = {{"k", d.k}};
  out.update(calex::json::fingerprint(fp));
  out["order"] = d.order ? json(d.order->get_str()) : json(nullptr);
  out["t1_invertible"] = d.t1_invertible;
  out["moduli"] = bigs(d.group.moduli());
  out["t_matrix"] = matrix(d.t_action.matrix());
  return out;
}

inline json presentation(const CPresentation& p) {
  json rels = json::array();
  for (const auto& r : p.relations) {
    rels.push_back({{"target", r.target}, {"source", r.source}, {"conjugator", to_string(r.conjugator)}});
  }
  json out = {{"generators", p.generators}, {"relations", rels}, {"deficiency", p.deficiency()}};
  out["hurwitz_degree"] = p.hurwitz_degree ? json(*p.hurwitz_degree) : json(nullptr);
  out["text"] = to_cg(p);
  return out;
}

inline json check(const NamedCheck& c) {
  json out = {{"name", c.name}, {"passed", c.passed}};
  if (!c.detail.empty()) out["detail"] = c.detail;
  return out;
}

inline json covering(const CoveringReport& r) {
  json out = {{"k", r.k}, {"setting", to_string(r.setting)}};
  out["group_A_k"] = fingerprint(r.fingerprint);
  out["group_A_k"]["order"] = r.module.order ? json(r.module.order->get_str()) : json(nullptr);
  out["extra_Z_summand"] = r.extra_Z_summand;
  out["rational_b1"] = r.rational_b1;
  out["alexander_polynomial"] = to_string(r.alexander);
  out["declared_degree"] = r.declared_degree ? json(*r.declared_degree) : json(nullptr);
  out["caveats"] = r.caveats;
  return out;
}

}  // namespace calex::json
