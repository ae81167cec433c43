#pragma once

#include <variant>
#include <vector>

#include "zagreb/graph.hpp"

namespace zagreb {

/// Replace edges v1u1, v2u2 by v1v2, u1u2. Degrees are unchanged; the index
/// does not drop when d(v1) >= d(u2) and d(v2) >= d(u1), and rises iff both
/// inequalities are strict.
struct EdgeSwap {
  int v1 = 0;
  int u1 = 0;
  int v2 = 0;
  int u2 = 0;

  friend bool operator==(const EdgeSwap&, const EdgeSwap&) = default;
};

/// Move the edges w_i v over to w_i u. With d(u) >= d(v) and the neighbour
/// degree sum of u at least that of v the index strictly rises.
struct NeighborTransfer {
  int u = 0;
  int v = 0;
  std::vector<int> moved;

  friend bool operator==(const NeighborTransfer&, const NeighborTransfer&) = default;
};

using SwapMove = std::variant<EdgeSwap, NeighborTransfer>;

bool is_valid(const SimpleGraph& g, const EdgeSwap& move);
bool is_valid(const SimpleGraph& g, const NeighborTransfer& move);

/// Throw DomainError when the move is not valid in `g`.
SimpleGraph apply_edge_swap(const SimpleGraph& g, const EdgeSwap& move);
SimpleGraph apply_neighbor_transfer(const SimpleGraph& g,
                                    const NeighborTransfer& move);
SimpleGraph apply_move(const SimpleGraph& g, const SwapMove& move);

/// Change in the second Zagreb index caused by a valid swap.
M2Value edge_swap_gain(const SimpleGraph& g, const EdgeSwap& move);

struct LocalSearchOptions {
  /// 1: single swaps only. 2: additionally try pairs of swaps whose
  /// intermediate graph may be disconnected, once no single swap improves.
  int depth = 2;
};

struct LocalSearchResult {
  SimpleGraph graph;
  std::vector<EdgeSwap> moves;  // in application order
};

/// First-improvement hill climbing over degree-preserving swaps in canonical
/// move order. Every accepted step strictly increases the index and keeps
/// the graph connected. Throws DomainError on a disconnected input.
LocalSearchResult local_search(const SimpleGraph& g,
                               const LocalSearchOptions& options = {});

}  // namespace zagreb
