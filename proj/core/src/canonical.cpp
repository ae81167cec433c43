#include <algorithm>
#include <optional>

#include "zagreb/graph.hpp"

namespace zagreb {

namespace {

using Coloring = std::vector<int>;  // 0-based vertex -> colour

// Colour refinement to the coarsest equitable partition finer than `colors`.
// New colours are ranks of (old colour, sorted neighbour colours), so the
// result depends only on the isomorphism class of (g, colors).
void refine(const SimpleGraph& g, Coloring& colors) {
  const int n = g.order();
  auto count_classes = [](const Coloring& c) {
    Coloring sorted = c;
    std::sort(sorted.begin(), sorted.end());
    return std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  };
  auto classes = count_classes(colors);
  while (true) {
    std::vector<std::vector<int>> signatures(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      auto& sig = signatures[v];
      sig.push_back(colors[v]);
      for (int w : g.neighbors(v + 1)) sig.push_back(colors[w - 1]);
      std::sort(sig.begin() + 1, sig.end());
    }
    auto distinct = signatures;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      colors[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), signatures[v]) -
          distinct.begin());
    }
    const auto next = static_cast<std::ptrdiff_t>(distinct.size());
    if (next == classes) return;
    classes = next;
  }
}

void search(const SimpleGraph& g, Coloring colors,
            std::optional<std::vector<Edge>>& best) {
  refine(g, colors);
  const int n = g.order();
  std::vector<int> cell_size(static_cast<std::size_t>(n), 0);
  for (int c : colors) ++cell_size[c];
  const auto target = std::find_if(cell_size.begin(), cell_size.end(),
                                    [](int s) { return s > 1; });
  if (target == cell_size.end()) {
    std::vector<Edge> cert;
    cert.reserve(g.size());
    for (const auto& e : g.edges()) {
      cert.emplace_back(colors[e.u - 1] + 1, colors[e.v - 1] + 1);
    }
    std::sort(cert.begin(), cert.end());
    if (!best || cert < *best) best = std::move(cert);
    return;
  }
  const int cell = static_cast<int>(target - cell_size.begin());
  for (int v = 0; v < n; ++v) {
    if (colors[v] != cell) continue;
    Coloring next(colors.size());
    for (int x = 0; x < n; ++x) {
      next[x] = 2 * colors[x] + (colors[x] == cell && x != v ? 1 : 0);
    }
    search(g, std::move(next), best);
  }
}

}  // namespace

std::vector<Edge> canonical_form(const SimpleGraph& g) {
  if (g.order() == 0) return {};
  std::optional<std::vector<Edge>> best;
  search(g, Coloring(static_cast<std::size_t>(g.order()), 0), best);
  return *best;
}

bool are_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace zagreb
