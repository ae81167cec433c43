#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/graph.hpp"
#include "zagreb/sequences.hpp"

namespace zagreb {

/// Result of the layered BFS construction. Vertex i carries degree d_i.
struct ConstructionTrace {
  SimpleGraph graph;
  std::vector<int> ordering;                 // v_1, v_2, ..., v_n
  std::vector<int> layer;                    // layer[v] = distance from v_1; index 0 unused
  std::vector<std::array<int, 3>> triangles; // (v_1, v_2, v_j), 3 <= j <= c+3
  std::vector<std::string> warnings;
};

/// Builds the candidate-optimal graph: v_1 adjacent to v_2..v_{d1+1},
/// triangles v_1 v_2 v_j for 3 <= j <= c+3, then remaining vertices attached
/// as children in index order to the lowest-indexed parent with spare degree.
///
/// Requires conditions (i), (ii) and (iv); if only the plateau condition (iii)
/// fails the graph is still built and a warning is attached.
ConstructionTrace construct_gm_star(const DegreeSequence& seq);

/// Bicyclic specialisation: requires c = 1, d_2 >= 3 and d_n = 1.
ConstructionTrace construct_bm_star(const DegreeSequence& seq);

enum class BfsViolation { None, LayerMonotone, DegreeMonotone, ParentOrder };

std::string_view to_string(BfsViolation violation);

struct BfsOrderingReport {
  bool holds = true;
  BfsViolation violated_condition = BfsViolation::None;
};

/// Checks the BFS-ordering-with-non-increasing-degrees conditions for the
/// ordering rooted at ordering.front(). Conditions are tested in the order
/// degree, layer, parent; the first one that fails is reported.
BfsOrderingReport verify_bfs_ordering(const SimpleGraph& g,
                                      std::span<const int> ordering);

}  // namespace zagreb
