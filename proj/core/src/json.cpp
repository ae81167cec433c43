#include "zagreb/json.hpp"

namespace zagreb {

nlohmann::json edges_json(const SimpleGraph& g) {
  auto out = nlohmann::json::array();
  for (const auto& e : g.edges()) out.push_back({e.u, e.v});
  return out;
}

nlohmann::json trace_sidecar(const ConstructionTrace& trace) {
  auto layers = nlohmann::json::object();
  for (int v = 1; v < static_cast<int>(trace.layer.size()); ++v) {
    layers[std::to_string(v)] = trace.layer[v];
  }
  auto triangles = nlohmann::json::array();
  for (const auto& t : trace.triangles) triangles.push_back({t[0], t[1], t[2]});
  return {{"ordering", trace.ordering},
          {"layers", std::move(layers)},
          {"triangles", std::move(triangles)},
          {"m2", second_zagreb(trace.graph)}};
}

nlohmann::json to_json(const BicyclicMaxResult& result) {
  return {{"case", result.case_id},
          {"value", result.value},
          {"family", result.witness.label()},
          {"family_kind", std::string(to_string(result.witness.family))},
          {"params", result.witness.params},
          {"edges", edges_json(result.witness.graph)}};
}

nlohmann::json to_json(const DegreeSequence& seq, const OracleResult& result,
                       bool with_timing) {
  nlohmann::json out{{"sequence", seq.to_string()},
                     {"max_m2", result.max_m2},
                     {"witness_edges", edges_json(result.witness)},
                     {"realizations", result.realization_count}};
  if (with_timing) out["elapsed_ms"] = result.elapsed_ms;
  return out;
}

}  // namespace zagreb
