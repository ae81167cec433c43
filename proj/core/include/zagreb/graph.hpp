#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/sequences.hpp"

namespace zagreb {

/// Unordered vertex pair stored with u < v. Vertices are 1-based.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using M2Value = std::int64_t;

/// Undirected simple graph on vertices 1..n.
///
/// The edge set and the per-vertex sorted neighbor lists are kept in sync.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int order);
  /// Throws DomainError on loops, duplicates or labels outside 1..n.
  SimpleGraph(int order, std::span<const Edge> edges);

  int order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }

  bool has_edge(int u, int v) const;
  int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
  std::span<const int> neighbors(int v) const { return adj_.at(v); }
  const std::set<Edge>& edges() const noexcept { return edges_; }
  /// Edges in canonical (lexicographic) order.
  std::vector<Edge> edge_list() const { return {edges_.begin(), edges_.end()}; }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int order_ = 0;
  std::set<Edge> edges_;
  std::vector<std::vector<int>> adj_;  // index 0 unused
};

/// Sum over edges of the product of endpoint degrees.
M2Value second_zagreb(const SimpleGraph& g);

/// Throws DomainError if some vertex is isolated.
DegreeSequence degree_sequence_of(const SimpleGraph& g);

bool is_connected(const SimpleGraph& g);

/// Graph with vertex v renamed to perm[v-1].
SimpleGraph relabel(const SimpleGraph& g, std::span<const int> perm);

/// Edge-list text: header "n m" then one "u v" line per edge, LF-terminated.
SimpleGraph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const SimpleGraph& g);
std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

/// Vertex-labelling-independent certificate; equal iff isomorphic.
/// Exhaustive individualisation-refinement, meant for small graphs.
std::vector<Edge> canonical_form(const SimpleGraph& g);
bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

}  // namespace zagreb
