#include "zagreb/constructor.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

std::vector<int> bfs_layers(const SimpleGraph& g, int root) {
  std::vector<int> layer(static_cast<std::size_t>(g.order()) + 1, -1);
  std::deque<int> queue{root};
  layer[root] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (layer[w] < 0) {
        layer[w] = layer[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return layer;
}

[[noreturn]] void abort_construction(const DegreeSequence& seq,
                                     const std::string& why) {
  throw DomainError("cannot construct layered graph for " + seq.to_string() +
                    ": " + why);
}

}  // namespace

ConstructionTrace construct_gm_star(const DegreeSequence& seq) {
  if (!is_connected_realizable(seq)) {
    throw DomainError("sequence " + seq.to_string() +
                      " has no connected realization");
  }
  const auto conditions = check_theorem_conditions(seq);
  if (!conditions.sum_condition) abort_construction(seq, "excess below -1");
  if (!conditions.head_condition) {
    abort_construction(seq, "requires d1 >= d2 >= c+2");
  }
  if (!conditions.leaf_condition) abort_construction(seq, "requires d_n = 1");

  ConstructionTrace trace;
  if (!conditions.plateau_condition) {
    trace.warnings.emplace_back(
        "condition (iii) violated; optimality not guaranteed");
  }

  const int n = seq.size();
  const int c = conditions.excess;
  auto degree = [&](int v) { return seq[static_cast<std::size_t>(v - 1)]; };

  SimpleGraph g(n);
  for (int v = 2; v <= degree(1) + 1; ++v) g.add_edge(1, v);
  for (int j = 3; j <= c + 3; ++j) {
    g.add_edge(2, j);
    trace.triangles.push_back({1, 2, j});
  }

  int next = degree(1) + 2;
  for (int v = 2; v <= n; ++v) {
    if (v >= next) {
      abort_construction(seq, "degree budget exhausted before vertex " +
                                  std::to_string(v) + " was placed");
    }
    const int spare = degree(v) - g.degree(v);
    if (spare < 0) {
      abort_construction(seq, "vertex " + std::to_string(v) +
                                  " needs more than its degree");
    }
    for (int k = 0; k < spare; ++k) {
      if (next > n) {
        abort_construction(seq, "vertex " + std::to_string(v) +
                                    " has unfilled degree and no vertices remain");
      }
      g.add_edge(v, next++);
    }
  }
  if (next != n + 1) abort_construction(seq, "vertices left unplaced");

  trace.ordering.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) trace.ordering[i] = i + 1;
  trace.layer = bfs_layers(g, 1);
  trace.graph = std::move(g);
  return trace;
}

ConstructionTrace construct_bm_star(const DegreeSequence& seq) {
  const auto cls = classify(seq);
  if (cls.kind != CycleKind::Bicyclic) {
    throw DomainError("sequence " + seq.to_string() + " is not bicyclic");
  }
  if (seq.size() < 2 || seq[1] < 3) throw DomainError("requires d2 >= 3");
  if (seq.back() != 1) throw DomainError("requires d_n = 1");
  return construct_gm_star(seq);
}

std::string_view to_string(BfsViolation violation) {
  switch (violation) {
    case BfsViolation::None: return "None";
    case BfsViolation::LayerMonotone: return "LayerMonotone";
    case BfsViolation::DegreeMonotone: return "DegreeMonotone";
    case BfsViolation::ParentOrder: return "ParentOrder";
  }
  return "None";
}

BfsOrderingReport verify_bfs_ordering(const SimpleGraph& g,
                                      std::span<const int> ordering) {
  const int n = g.order();
  if (static_cast<int>(ordering.size()) != n || n == 0) {
    throw DomainError("ordering must list every vertex exactly once");
  }
  std::vector<int> position(static_cast<std::size_t>(n) + 1, -1);
  for (int i = 0; i < n; ++i) {
    const int v = ordering[i];
    if (v < 1 || v > n || position[v] >= 0) {
      throw DomainError("ordering must list every vertex exactly once");
    }
    position[v] = i;
  }
  if (!is_connected(g)) throw DomainError("graph is not connected");

  const auto layer = bfs_layers(g, ordering.front());
  auto fail = [](BfsViolation why) { return BfsOrderingReport{false, why}; };

  for (int i = 0; i + 1 < n; ++i) {
    if (g.degree(ordering[i]) < g.degree(ordering[i + 1])) {
      return fail(BfsViolation::DegreeMonotone);
    }
  }
  for (int i = 0; i + 1 < n; ++i) {
    if (layer[ordering[i]] > layer[ordering[i + 1]]) {
      return fail(BfsViolation::LayerMonotone);
    }
  }
  // Every parent of an earlier vertex must precede (or equal) every parent of
  // a later one.
  int latest_parent = -1;
  for (int v : ordering) {
    int first = std::numeric_limits<int>::max();
    int last = -1;
    for (int w : g.neighbors(v)) {
      if (layer[w] + 1 == layer[v]) {
        first = std::min(first, position[w]);
        last = std::max(last, position[w]);
      }
    }
    if (last < 0) continue;
    if (first < latest_parent) return fail(BfsViolation::ParentOrder);
    latest_parent = std::max(latest_parent, last);
  }
  return {};
}

}  // namespace zagreb
