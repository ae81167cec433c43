#pragma once

#include <nlohmann/json.hpp>

#include "zagreb/bicyclic.hpp"
#include "zagreb/constructor.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/oracle.hpp"

namespace zagreb {

/// [[u,v], ...] in canonical order.
nlohmann::json edges_json(const SimpleGraph& g);

/// {ordering, layers, triangles, m2}
nlohmann::json trace_sidecar(const ConstructionTrace& trace);

/// {case, value, family, params, edges}
nlohmann::json to_json(const BicyclicMaxResult& result);

/// {sequence, max_m2, witness_edges, realizations, elapsed_ms}; the timing
/// field is omitted when `with_timing` is false.
nlohmann::json to_json(const DegreeSequence& seq, const OracleResult& result,
                       bool with_timing = true);

}  // namespace zagreb
