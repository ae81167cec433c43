#pragma once

// Reference implementations that share no code with the library: every
// labelled graph on n vertices is visited as a bitmask over the C(n,2) pairs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace zagreb::testing {

struct BruteGraph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // 1-based, u < v
  std::vector<int> degree;                 // index 0 unused
};

inline std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

inline bool brute_connected(const BruteGraph& g) {
  std::vector<int> parent(g.n + 1);
  for (int v = 0; v <= g.n; ++v) parent[v] = v;
  std::function<int(int)> find = [&](int v) {
    return parent[v] == v ? v : parent[v] = find(parent[v]);
  };
  int components = g.n;
  for (auto [u, v] : g.edges) {
    const int a = find(u);
    const int b = find(v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

inline std::int64_t brute_m2(const BruteGraph& g) {
  std::int64_t total = 0;
  for (auto [u, v] : g.edges) total += std::int64_t{g.degree[u]} * g.degree[v];
  return total;
}

/// Visits all 2^C(n,2) labelled graphs on vertices 1..n.
template <class Visit>
void for_each_labelled_graph(int n, Visit&& visit) {
  const auto pairs = all_pairs(n);
  const std::uint64_t limit = std::uint64_t{1} << pairs.size();
  BruteGraph g;
  g.n = n;
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    g.edges.clear();
    g.degree.assign(n + 1, 0);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask >> i & 1) {
        g.edges.push_back(pairs[i]);
        ++g.degree[pairs[i].first];
        ++g.degree[pairs[i].second];
      }
    }
    visit(g);
  }
}

inline std::vector<int> sorted_degrees(const BruteGraph& g) {
  std::vector<int> d(g.degree.begin() + 1, g.degree.end());
  std::sort(d.begin(), d.end(), std::greater<>{});
  return d;
}

struct BruteSummary {
  std::uint64_t all = 0;        // sorted degree sequence equals target
  std::uint64_t connected = 0;  // ... and connected
  std::uint64_t fixed = 0;      // connected with degree(i) = target[i-1]
  std::optional<std::int64_t> max_m2;  // over connected realizations
};

/// `target` must be non-increasing.
inline BruteSummary brute_summary(const std::vector<int>& target) {
  BruteSummary out;
  const int n = static_cast<int>(target.size());
  for_each_labelled_graph(n, [&](const BruteGraph& g) {
    if (sorted_degrees(g) != target) return;
    ++out.all;
    if (!brute_connected(g)) return;
    ++out.connected;
    if (std::equal(target.begin(), target.end(), g.degree.begin() + 1)) {
      ++out.fixed;
    }
    const auto m2 = brute_m2(g);
    if (!out.max_m2 || m2 > *out.max_m2) out.max_m2 = m2;
  });
  return out;
}

/// Every non-increasing sequence of length n with entries in [lo, hi].
inline std::vector<std::vector<int>> all_sequences(int n, int lo, int hi) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int cap) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int d = cap; d >= lo; --d) {
      cur.push_back(d);
      rec(d);
      cur.pop_back();
    }
  };
  rec(hi);
  return out;
}

}  // namespace zagreb::testing
