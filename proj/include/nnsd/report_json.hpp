#pragma once

#include <json.hpp>

#include "nnsd/solve.hpp"
#include "nnsd/theorems.hpp"

namespace nnsd {

using Json = nlohmann::json;

inline Json to_json(const BoundCheck& c) {
  return Json{{"name", c.name},   {"lhs", c.lhs},     {"rhs", c.rhs},
              {"relation", c.relation}, {"holds", c.holds}, {"tight", c.tight},
              {"near_boundary", c.near_boundary}};
}

inline Json to_json(const VerificationReport& rep) {
  Json j;
  j["graph"] = Json{{"n", rep.n}, {"format", rep.format}, {"repr", rep.repr}};
  j["profile"] = Json{
      {"delta", rep.profile.delta},
      {"Delta", rep.profile.Delta},
      {"regular", rep.profile.regular_degree ? Json(*rep.profile.regular_degree) : Json(nullptr)},
      {"clique_number", rep.profile.clique_number},
      {"is_tree", rep.profile.tree.is_tree},
      {"ell", rep.profile.tree.is_tree ? Json(rep.profile.tree.ell) : Json(nullptr)},
      {"s_prime", rep.profile.tree.is_tree ? Json(rep.profile.tree.s_prime) : Json(nullptr)}};
  auto opt_int = [](const std::optional<long long>& v) { return v ? Json(*v) : Json(nullptr); };
  auto opt_pair = [](const std::optional<std::pair<int, long long>>& v) {
    return v ? Json{{"k", v->first}, {"value", v->second}} : Json(nullptr);
  };
  j["parameters"] = Json{{"nnsdn", opt_int(rep.parameters.nnsdn)},
                         {"sdn", opt_int(rep.parameters.sdn)},
                         {"s2in", opt_int(rep.parameters.s2in)},
                         {"lk", opt_pair(rep.parameters.lk)},
                         {"tupledom", opt_pair(rep.parameters.tupledom)}};
  Json checks = Json::array();
  for (const auto& c : rep.checks) checks.push_back(to_json(c));
  j["checks"] = std::move(checks);
  auto opt_bool = [](const std::optional<bool>& v) { return v ? Json(*v) : Json(nullptr); };
  j["characterizations"] = Json{{"theta", opt_bool(rep.theta)}, {"omega", opt_bool(rep.omega)}};
  Json labels = Json::array();
  for (int l : rep.nnsdn_witness.labels) labels.push_back(l);
  j["witnesses"] = Json{{"nnsdn_labels", std::move(labels)}};
  j["refuted_prior_bound"] = opt_bool(rep.refuted_prior_bound);
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

inline Json to_json(const ParameterResult& r, const std::string& param, int n) {
  Json j{{"param", param}, {"n", n}, {"value", r.value}, {"solver", r.solver}, {"nodes", r.nodes}};
  if (std::holds_alternative<SignFunction>(r.witness)) {
    Json labels = Json::array();
    for (int l : r.sign_witness().labels) labels.push_back(l);
    j["witness"] = std::move(labels);
  } else {
    j["witness"] = r.set_witness();
  }
  return j;
}

}  // namespace nnsd
