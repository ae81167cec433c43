#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zagreb/bicyclic.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/moves.hpp"
#include "zagreb/oracle.hpp"

namespace zagreb {
namespace {

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

TEST(EdgeSwap, DuplicateEdgeIsRejected) {
  SimpleGraph p4(4);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  p4.add_edge(3, 4);
  const EdgeSwap move{2, 1, 3, 4};
  EXPECT_FALSE(is_valid(p4, move));
  EXPECT_THROW(apply_edge_swap(p4, move), DomainError);
}

TEST(EdgeSwap, CycleEqualityCase) {
  const auto c6 = cycle(6);
  const EdgeSwap move{1, 2, 4, 5};
  ASSERT_TRUE(is_valid(c6, move));
  const auto h = apply_edge_swap(c6, move);
  EXPECT_TRUE(h.has_edge(1, 4));
  EXPECT_TRUE(h.has_edge(2, 5));
  EXPECT_FALSE(h.has_edge(1, 2));
  EXPECT_EQ(second_zagreb(c6), 24);
  EXPECT_EQ(second_zagreb(h), 24);
  EXPECT_EQ(edge_swap_gain(c6, move), 0);
}

TEST(EdgeSwap, InvalidShapes) {
  const auto c6 = cycle(6);
  EXPECT_FALSE(is_valid(c6, EdgeSwap{1, 2, 1, 6}));  // shared vertex
  EXPECT_FALSE(is_valid(c6, EdgeSwap{1, 3, 4, 5}));  // missing edge
  EXPECT_FALSE(is_valid(c6, EdgeSwap{1, 2, 0, 5}));  // out of range
}

TEST(EdgeSwap, PlateauGapImprovedWithinTwoSwaps) {
  const auto g = testing::load_graph("plateau_gap_layered.txt");
  const auto target = testing::load_graph("plateau_gap_improved.txt");
  bool found = false;
  auto try_all = [](const SimpleGraph& h, auto&& visit) {
    const auto es = h.edge_list();
    for (std::size_t a = 0; a < es.size(); ++a) {
      for (std::size_t b = a + 1; b < es.size(); ++b) {
        for (const EdgeSwap m : {EdgeSwap{es[a].u, es[a].v, es[b].u, es[b].v},
                                 EdgeSwap{es[a].u, es[a].v, es[b].v, es[b].u}}) {
          if (is_valid(h, m)) visit(m);
        }
      }
    }
  };
  try_all(g, [&](const EdgeSwap& first) {
    const auto mid = apply_edge_swap(g, first);
    if (mid == target) found = true;
    try_all(mid, [&](const EdgeSwap& second) {
      if (apply_edge_swap(mid, second) == target) found = true;
    });
  });
  EXPECT_TRUE(found);
}

// Random connected graph with n-1+extra edges.
SimpleGraph random_graph(std::mt19937& rng, int n, int extra) {
  SimpleGraph g(n);
  for (int v = 2; v <= n; ++v) {
    g.add_edge(v, 1 + static_cast<int>(rng() % static_cast<unsigned>(v - 1)));
  }
  for (int tries = 0; extra > 0 && tries < 1000; ++tries) {
    const int u = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    const int v = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
    if (u != v && !g.has_edge(u, v)) {
      g.add_edge(u, v);
      --extra;
    }
  }
  return g;
}

TEST(EdgeSwap, PreservesDegreesAndGainIsExact) {
  std::mt19937 rng(5);
  int applied = 0;
  while (applied < 2000) {
    const auto g = random_graph(rng, 5 + static_cast<int>(rng() % 8), static_cast<int>(rng() % 6));
    const auto es = g.edge_list();
    const auto& e = es[rng() % es.size()];
    const auto& f = es[rng() % es.size()];
    const EdgeSwap m{e.u, e.v, f.u, f.v};
    if (!is_valid(g, m)) continue;
    const auto h = apply_edge_swap(g, m);
    for (int v = 1; v <= g.order(); ++v) EXPECT_EQ(h.degree(v), g.degree(v));
    EXPECT_EQ(second_zagreb(h) - second_zagreb(g), edge_swap_gain(g, m));
    ++applied;
  }
}

TEST(NeighborTransfer, EmptyTransferIsIdentity) {
  const auto g = cycle(5);
  const NeighborTransfer m{1, 3, {}};
  ASSERT_TRUE(is_valid(g, m));
  EXPECT_EQ(apply_neighbor_transfer(g, m), g);
}

TEST(NeighborTransfer, StarsJoinedByBridge) {
  // Star centred at 1 (leaves 2,3,4) bridged to vertex 5 with leaves 6,7.
  SimpleGraph g(7);
  for (auto [a, b] : {std::pair{1, 2}, {1, 3}, {1, 4}, {1, 5}, {5, 6}, {5, 7}}) {
    g.add_edge(a, b);
  }
  const NeighborTransfer m{1, 5, {6}};
  ASSERT_TRUE(is_valid(g, m));
  ASSERT_GE(g.degree(1), g.degree(5));
  const auto h = apply_neighbor_transfer(g, m);
  EXPECT_GT(second_zagreb(h), second_zagreb(g));
  EXPECT_EQ(h.degree(1), g.degree(1) + 1);
  EXPECT_EQ(h.degree(5), g.degree(5) - 1);
  for (int v : {2, 3, 4, 6, 7}) EXPECT_EQ(h.degree(v), g.degree(v));
}

TEST(NeighborTransfer, PendantPathsMoveTowardsCentre) {
  const std::vector<int> lengths{2, 2};
  const auto g = build_b_pq_paths(3, 3, lengths);
  // Vertex 6 is the first vertex of the first pendant path, 7 its end.
  ASSERT_EQ(g.degree(1), 6);
  ASSERT_TRUE(g.has_edge(1, 6));
  ASSERT_TRUE(g.has_edge(6, 7));
  // Moving leaf 7 onto the centre: d(1) >= d(6) and the neighbour degree sums
  // favour the centre.
  const NeighborTransfer forward{1, 6, {7}};
  ASSERT_TRUE(is_valid(g, forward));
  EXPECT_GT(second_zagreb(apply_neighbor_transfer(g, forward)), second_zagreb(g));
  // The reverse direction detaches a cycle neighbour from the centre.
  const NeighborTransfer backward{6, 1, {2}};
  ASSERT_TRUE(is_valid(g, backward));
  EXPECT_LT(second_zagreb(apply_neighbor_transfer(g, backward)), second_zagreb(g));
}

TEST(NeighborTransfer, InvalidMoves) {
  const auto g = cycle(5);
  EXPECT_FALSE(is_valid(g, NeighborTransfer{1, 1, {}}));
  EXPECT_FALSE(is_valid(g, NeighborTransfer{1, 3, {1}}));
  EXPECT_FALSE(is_valid(g, NeighborTransfer{1, 3, {2}}));     // already adjacent to u
  EXPECT_FALSE(is_valid(g, NeighborTransfer{1, 3, {5}}));     // not a neighbour of v
  EXPECT_FALSE(is_valid(g, NeighborTransfer{1, 3, {4, 4}}));  // repeated
  EXPECT_THROW(apply_move(g, SwapMove{NeighborTransfer{1, 3, {5}}}), DomainError);
}

TEST(ApplyMove, DispatchesBothKinds) {
  const auto c6 = cycle(6);
  EXPECT_EQ(apply_move(c6, SwapMove{EdgeSwap{1, 2, 4, 5}}),
            apply_edge_swap(c6, EdgeSwap{1, 2, 4, 5}));
  EXPECT_EQ(apply_move(c6, SwapMove{NeighborTransfer{1, 3, {4}}}),
            apply_neighbor_transfer(c6, NeighborTransfer{1, 3, {4}}));
}

TEST(LocalSearch, CycleIsLocallyOptimal) {
  for (int n = 4; n <= 8; ++n) {
    const auto r = local_search(cycle(n));
    EXPECT_TRUE(r.moves.empty());
    EXPECT_EQ(r.graph, cycle(n));
  }
}

TEST(LocalSearch, OracleWitnessIsUnchanged) {
  for (const char* text : {"3,3,3,3,1,1", "4,3,2,2,2,2,1", "5,3,2,2,1,1,1,1"}) {
    const auto w = oracle_max_m2(DegreeSequence::parse(text)).witness;
    const auto r = local_search(w);
    EXPECT_TRUE(r.moves.empty()) << text;
    EXPECT_EQ(r.graph, w);
  }
}

TEST(LocalSearch, PlateauGapImproves) {
  const auto g = testing::load_graph("plateau_gap_layered.txt");
  LocalSearchOptions single;
  single.depth = 1;
  EXPECT_TRUE(local_search(g, single).moves.empty());
  const auto r = local_search(g);
  EXPECT_GE(second_zagreb(r.graph), 87);
  EXPECT_FALSE(r.moves.empty());
  EXPECT_EQ(degree_sequence_of(r.graph), degree_sequence_of(g));
}

TEST(LocalSearch, MonotoneOnRandomGraphs) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto g = random_graph(rng, 6 + static_cast<int>(rng() % 5), static_cast<int>(rng() % 4));
    const auto r = local_search(g, LocalSearchOptions{1});
    EXPECT_TRUE(is_connected(r.graph));
    EXPECT_EQ(degree_sequence_of(r.graph), degree_sequence_of(g));
    auto current = g;
    for (const auto& m : r.moves) {
      const auto next = apply_edge_swap(current, m);
      EXPECT_GT(second_zagreb(next), second_zagreb(current));
      current = next;
    }
    EXPECT_EQ(current, r.graph);
  }
}

TEST(LocalSearch, RejectsDisconnectedInput) {
  SimpleGraph g(4);
  g.add_edge(1, 2);
  g.add_edge(3, 4);
  EXPECT_THROW(local_search(g), DomainError);
}

}  // namespace
}  // namespace zagreb
