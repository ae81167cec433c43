#include "zagreb/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <optional>
#include <thread>

#include "zagreb/errors.hpp"

namespace zagreb {

namespace {

using Mask = std::uint32_t;
using Adjacency = std::vector<Mask>;  // 0-based vertices

// Backtracking state. Vertices are completed in index order: when vertex v
// is processed it picks its remaining neighbours among later vertices, so
// each labelled graph is produced exactly once.
struct SearchState {
  std::vector<int> degree;
  std::vector<int> residual;
  Adjacency adj;
  M2Value m2 = 0;

  int order() const { return static_cast<int>(degree.size()); }
};

SearchState initial_state(std::span<const int> degrees) {
  SearchState st;
  st.degree.assign(degrees.begin(), degrees.end());
  st.residual = st.degree;
  st.adj.assign(degrees.size(), 0);
  return st;
}

bool tail_graphic(const SearchState& st, int from) {
  return is_graphic(std::span<const int>(st.residual).subspan(
      static_cast<std::size_t>(from)));
}

bool connected(const Adjacency& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 0) return true;
  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  Mask seen = 1;
  Mask frontier = 1;
  while (frontier) {
    Mask next = 0;
    for (Mask f = frontier; f; f &= f - 1) next |= adj[std::countr_zero(f)];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

std::vector<Edge> edges_of(const Adjacency& adj) {
  std::vector<Edge> out;
  for (int u = 0; u < static_cast<int>(adj.size()); ++u) {
    for (Mask m = adj[u] >> (u + 1); m; m &= m - 1) {
      out.emplace_back(u + 1, u + 2 + std::countr_zero(m));
    }
  }
  return out;
}

SimpleGraph to_graph(const Adjacency& adj) {
  const auto edges = edges_of(adj);
  return SimpleGraph(static_cast<int>(adj.size()), edges);
}

template <class OnVertexDone>
void choose_neighbors(SearchState& st, int v, int start,
                      const std::vector<int>& candidates,
                      OnVertexDone& on_done) {
  if (st.residual[v] == 0) {
    if (tail_graphic(st, v + 1)) on_done(st);
    return;
  }
  const int need = st.residual[v];
  const int last = static_cast<int>(candidates.size()) - need;
  for (int i = start; i <= last; ++i) {
    const int w = candidates[i];
    st.adj[v] |= Mask{1} << w;
    st.adj[w] |= Mask{1} << v;
    --st.residual[v];
    --st.residual[w];
    st.m2 += static_cast<M2Value>(st.degree[v]) * st.degree[w];
    choose_neighbors(st, v, i + 1, candidates, on_done);
    st.m2 -= static_cast<M2Value>(st.degree[v]) * st.degree[w];
    ++st.residual[w];
    ++st.residual[v];
    st.adj[w] &= ~(Mask{1} << v);
    st.adj[v] &= ~(Mask{1} << w);
  }
}

template <class OnVertexDone>
void expand_vertex(SearchState& st, int v, OnVertexDone& on_done) {
  std::vector<int> candidates;
  for (int w = v + 1; w < st.order(); ++w) {
    if (st.residual[w] > 0) candidates.push_back(w);
  }
  if (static_cast<int>(candidates.size()) < st.residual[v]) return;
  choose_neighbors(st, v, 0, candidates, on_done);
}

template <class Leaf>
void search_from(SearchState& st, int v, Leaf& leaf) {
  if (v == st.order()) {
    leaf(st);
    return;
  }
  auto descend = [&](SearchState& s) { search_from(s, v + 1, leaf); };
  expand_vertex(st, v, descend);
}

void check_searchable(const DegreeSequence& seq, int cap) {
  if (seq.size() > cap) throw CapExceeded(seq.size(), cap);
  if (seq.size() > kMaxSearchOrder) throw CapExceeded(seq.size(), kMaxSearchOrder);
  if (!is_graphic(seq)) {
    throw DomainError("sequence " + seq.to_string() + " is not graphic");
  }
}

struct PartialMax {
  std::uint64_t count = 0;
  M2Value best = -1;
  std::optional<std::vector<Edge>> witness;

  void offer(M2Value value, const Adjacency& adj) {
    ++count;
    if (value < best) return;
    auto edges = edges_of(adj);
    if (value > best || edges < *witness) {
      best = value;
      witness = std::move(edges);
    }
  }

  void merge(PartialMax&& other) {
    count += other.count;
    if (!other.witness) return;
    if (other.best > best || (other.best == best && *other.witness < *witness)) {
      best = other.best;
      witness = std::move(other.witness);
    }
  }
};

}  // namespace

void enumerate_realizations(const DegreeSequence& seq,
                            const EnumerationOptions& options,
                            const std::function<void(const SimpleGraph&)>& visit) {
  check_searchable(seq, options.cap);
  auto leaf = [&](SearchState& st) {
    if (!options.connected_only || connected(st.adj)) visit(to_graph(st.adj));
  };
  auto run = [&](std::span<const int> degrees) {
    auto st = initial_state(degrees);
    search_from(st, 0, leaf);
  };
  if (options.labeling == Labeling::FixedDegrees) {
    run(seq.degrees());
    return;
  }
  std::vector<int> degrees(seq.degrees().rbegin(), seq.degrees().rend());
  do {
    run(degrees);
  } while (std::next_permutation(degrees.begin(), degrees.end()));
}

std::uint64_t count_realizations(const DegreeSequence& seq,
                                 const EnumerationOptions& options) {
  std::uint64_t count = 0;
  enumerate_realizations(seq, options, [&](const SimpleGraph&) { ++count; });
  return count;
}

OracleResult oracle_max_m2(const DegreeSequence& seq,
                           const OracleOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  check_searchable(seq, options.cap);
  if (!is_connected_realizable(seq)) {
    throw EmptyRealizationSet("sequence " + seq.to_string() +
                              " has no connected realization");
  }

  // Subtrees are split on the neighbourhood of vertex 1 and reduced in that
  // fixed order, so the outcome is independent of the worker count.
  std::vector<SearchState> tasks;
  auto root = initial_state(seq.degrees());
  auto collect = [&](SearchState& st) { tasks.push_back(st); };
  expand_vertex(root, 0, collect);

  std::vector<PartialMax> partials(tasks.size());
  std::atomic<std::size_t> next_task{0};
  auto worker = [&] {
    for (auto i = next_task++; i < tasks.size(); i = next_task++) {
      auto& part = partials[i];
      auto leaf = [&part](SearchState& st) {
        if (connected(st.adj)) part.offer(st.m2, st.adj);
      };
      search_from(tasks[i], 1, leaf);
    }
  };
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.workers,
                                      static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  PartialMax total;
  for (auto& part : partials) total.merge(std::move(part));
  if (!total.witness) {
    throw EmptyRealizationSet("sequence " + seq.to_string() +
                              " has no connected realization");
  }
  OracleResult out;
  out.max_m2 = total.best;
  out.witness = SimpleGraph(seq.size(), *total.witness);
  out.realization_count = total.count;
  out.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - started)
                       .count();
  return out;
}

}  // namespace zagreb
