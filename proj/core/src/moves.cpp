#include "zagreb/moves.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

bool in_range(const SimpleGraph& g, int v) { return v >= 1 && v <= g.order(); }

// Both orientations of every unordered pair of edges, in canonical order.
template <class Visit>
bool for_each_swap(const SimpleGraph& g, Visit&& visit) {
  const auto edges = g.edge_list();
  for (std::size_t a = 0; a < edges.size(); ++a) {
    for (std::size_t b = a + 1; b < edges.size(); ++b) {
      const auto& e = edges[a];
      const auto& f = edges[b];
      for (const EdgeSwap& move : {EdgeSwap{e.u, e.v, f.u, f.v},
                                   EdgeSwap{e.u, e.v, f.v, f.u}}) {
        if (is_valid(g, move) && visit(move)) return true;
      }
    }
  }
  return false;
}

}  // namespace

bool is_valid(const SimpleGraph& g, const EdgeSwap& m) {
  for (int v : {m.v1, m.u1, m.v2, m.u2}) {
    if (!in_range(g, v)) return false;
  }
  std::array<int, 4> vs{m.v1, m.u1, m.v2, m.u2};
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  return g.has_edge(m.v1, m.u1) && g.has_edge(m.v2, m.u2) &&
         !g.has_edge(m.v1, m.v2) && !g.has_edge(m.u1, m.u2);
}

bool is_valid(const SimpleGraph& g, const NeighborTransfer& m) {
  if (!in_range(g, m.u) || !in_range(g, m.v) || m.u == m.v) return false;
  auto moved = m.moved;
  std::sort(moved.begin(), moved.end());
  if (std::adjacent_find(moved.begin(), moved.end()) != moved.end()) return false;
  return std::all_of(moved.begin(), moved.end(), [&](int w) {
    return w != m.u && g.has_edge(w, m.v) && !g.has_edge(w, m.u);
  });
}

M2Value edge_swap_gain(const SimpleGraph& g, const EdgeSwap& m) {
  const M2Value dv1 = g.degree(m.v1);
  const M2Value du1 = g.degree(m.u1);
  const M2Value dv2 = g.degree(m.v2);
  const M2Value du2 = g.degree(m.u2);
  return dv1 * dv2 + du1 * du2 - dv1 * du1 - dv2 * du2;
}

SimpleGraph apply_edge_swap(const SimpleGraph& g, const EdgeSwap& m) {
  if (!is_valid(g, m)) {
    throw DomainError("edge swap (" + std::to_string(m.v1) + "," +
                      std::to_string(m.u1) + ")/(" + std::to_string(m.v2) + "," +
                      std::to_string(m.u2) + ") is not valid in this graph");
  }
  SimpleGraph out = g;
  out.remove_edge(m.v1, m.u1);
  out.remove_edge(m.v2, m.u2);
  out.add_edge(m.v1, m.v2);
  out.add_edge(m.u1, m.u2);
  return out;
}

SimpleGraph apply_neighbor_transfer(const SimpleGraph& g,
                                    const NeighborTransfer& m) {
  if (!is_valid(g, m)) {
    throw DomainError("neighbour transfer " + std::to_string(m.v) + " -> " +
                      std::to_string(m.u) + " is not valid in this graph");
  }
  SimpleGraph out = g;
  for (int w : m.moved) {
    out.remove_edge(w, m.v);
    out.add_edge(w, m.u);
  }
  return out;
}

SimpleGraph apply_move(const SimpleGraph& g, const SwapMove& move) {
  return std::visit(
      [&](const auto& m) -> SimpleGraph {
        if constexpr (std::is_same_v<std::decay_t<decltype(m)>, EdgeSwap>) {
          return apply_edge_swap(g, m);
        } else {
          return apply_neighbor_transfer(g, m);
        }
      },
      move);
}

LocalSearchResult local_search(const SimpleGraph& g,
                               const LocalSearchOptions& options) {
  if (!is_connected(g)) throw DomainError("local search needs a connected graph");
  LocalSearchResult result{g, {}};
  auto& current = result.graph;
  while (true) {
    std::optional<EdgeSwap> single;
    for_each_swap(current, [&](const EdgeSwap& m) {
      if (edge_swap_gain(current, m) <= 0) return false;
      if (!is_connected(apply_edge_swap(current, m))) return false;
      single = m;
      return true;
    });
    if (single) {
      current = apply_edge_swap(current, *single);
      result.moves.push_back(*single);
      continue;
    }
    if (options.depth < 2) break;

    std::optional<std::pair<EdgeSwap, EdgeSwap>> pair;
    for_each_swap(current, [&](const EdgeSwap& first) {
      const M2Value gain = edge_swap_gain(current, first);
      const auto middle = apply_edge_swap(current, first);
      return for_each_swap(middle, [&](const EdgeSwap& second) {
        if (gain + edge_swap_gain(middle, second) <= 0) return false;
        if (!is_connected(apply_edge_swap(middle, second))) return false;
        pair.emplace(first, second);
        return true;
      });
    });
    if (!pair) break;
    current = apply_edge_swap(apply_edge_swap(current, pair->first), pair->second);
    result.moves.push_back(pair->first);
    result.moves.push_back(pair->second);
  }
  return result;
}

}  // namespace zagreb
