#include "throttle/serialize.hpp"

namespace throttle {

Json to_json(const VertexSet& s) { return s.members(); }

Json to_json(PropagationTime t) { return t.is_finite() ? Json(t.value()) : Json("inf"); }

Json to_json(const PropagationTrace& trace) {
  Json steps = Json::array();
  for (const VertexSet& f : trace.fills) steps.push_back(to_json(f));
  return {
      {"rule", to_string(trace.rule)},
      {"initial", to_json(trace.initial)},
      {"steps", steps},
      {"completed", trace.completed},
      {"final", to_json(trace.final_set())},
      {"pt", to_json(trace.time())},
  };
}

Json to_json(const ThrottlingResult& r) {
  Json out = {
      {"rule", to_string(r.rule)},
      {"kind", to_string(r.kind)},
      {"value", r.value},
      {"witness", to_json(r.witness)},
      {"witness_pt", r.witness_pt},
  };
  if (!r.per_k.empty()) {
    Json table = Json::array();
    for (const ThrottleValue& v : r.per_k) table.push_back(v ? Json(*v) : Json("inf"));
    out["per_k"] = table;
  }
  return out;
}

Json to_json(const DominationCertificate& c) {
  Json epn = Json::object();
  for (const auto& [v, s] : c.private_neighbors) epn[std::to_string(v)] = to_json(s);
  return {
      {"set", to_json(c.set)},
      {"size", c.set.size()},
      {"induced_edges", c.induced_edges},
      {"degree_sum", c.degree_sum},
      {"optimality", to_string(c.optimality)},
      {"epn", epn},
  };
}

Json to_json(const BoundCertificate& c) {
  return {
      {"target", to_string(c.target)},
      {"order", c.order},
      {"dominating", to_json(c.dominating)},
      {"private_neighbors", to_json(c.selected_private_neighbors)},
      {"power_set", to_json(c.power_set)},
      {"pt", c.pt},
      {"bound", {{"num", c.bound.num}, {"den", c.bound.den}}},
      {"value", c.value},
  };
}

Json to_json(const EqualityReport& r) {
  return {
      {"order", r.order},
      {"gamma", r.gamma},
      {"product_throttling", r.product_throttling},
      {"status", to_string(r.status)},
      {"converse_counterexample", r.converse_counterexample},
  };
}

}  // namespace throttle
