#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "zagreb/bicyclic.hpp"
#include "zagreb/errors.hpp"
#include "zagreb/graph.hpp"
#include "zagreb/sequences.hpp"

namespace zagreb {
namespace {

SimpleGraph make(int n, std::initializer_list<std::pair<int, int>> pairs) {
  SimpleGraph g(n);
  for (auto [u, v] : pairs) g.add_edge(u, v);
  return g;
}

SimpleGraph cycle(int n) {
  SimpleGraph g(n);
  for (int v = 1; v <= n; ++v) g.add_edge(v, v % n + 1);
  return g;
}

SimpleGraph star(int n) {
  SimpleGraph g(n);
  for (int v = 2; v <= n; ++v) g.add_edge(1, v);
  return g;
}

M2Value vertex_form_m2(const SimpleGraph& g) {
  M2Value twice = 0;
  for (int v = 1; v <= g.order(); ++v) {
    M2Value around = 0;
    for (int u : g.neighbors(v)) around += g.degree(u);
    twice += g.degree(v) * around;
  }
  return twice / 2;
}

std::vector<SimpleGraph> sample_graphs() {
  return {cycle(3),
          cycle(7),
          star(6),
          build_b_pq(3, 4),
          build_theta(3, 2, 1),
          testing::load_graph("plateau_gap_layered.txt"),
          testing::load_graph("plateau_gap_improved.txt"),
          testing::load_graph("four_hubs_layered.txt"),
          testing::load_graph("four_hubs_alternative.txt")};
}

TEST(SimpleGraph, EdgesAreNormalisedAndSorted) {
  auto g = make(4, {{3, 1}, {2, 1}, {4, 3}});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_TRUE(g.has_edge(1, 3));
  EXPECT_TRUE(g.has_edge(3, 1));
  const auto edges = g.edge_list();
  ASSERT_EQ(edges.size(), 3u);
  EXPECT_EQ(edges[0], Edge(1, 2));
  EXPECT_EQ(edges[1], Edge(1, 3));
  EXPECT_EQ(edges[2], Edge(3, 4));
  EXPECT_EQ(std::vector<int>(g.neighbors(3).begin(), g.neighbors(3).end()),
            (std::vector<int>{1, 4}));
}

TEST(SimpleGraph, MutationErrors) {
  auto g = make(3, {{1, 2}});
  EXPECT_THROW(g.add_edge(1, 1), DomainError);
  EXPECT_THROW(g.add_edge(2, 1), DomainError);
  EXPECT_THROW(g.add_edge(0, 1), DomainError);
  EXPECT_THROW(g.add_edge(1, 4), DomainError);
  EXPECT_THROW(g.remove_edge(2, 3), DomainError);
  g.remove_edge(2, 1);
  EXPECT_EQ(g.size(), 0u);
}

TEST(SecondZagreb, Examples) {
  EXPECT_EQ(second_zagreb(cycle(3)), 12);
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(second_zagreb(cycle(n)), 4 * n);
  EXPECT_EQ(second_zagreb(testing::load_graph("plateau_gap_layered.txt")), 86);
  EXPECT_EQ(second_zagreb(testing::load_graph("plateau_gap_improved.txt")), 87);
  EXPECT_EQ(second_zagreb(SimpleGraph(3)), 0);
}

TEST(SecondZagreb, VertexFormAgrees) {
  for (const auto& g : sample_graphs()) EXPECT_EQ(second_zagreb(g), vertex_form_m2(g));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 9);
    SimpleGraph g(n);
    for (int u = 1; u <= n; ++u) {
      for (int v = u + 1; v <= n; ++v) {
        if (rng() % 3 == 0) g.add_edge(u, v);
      }
    }
    EXPECT_EQ(second_zagreb(g), vertex_form_m2(g));
  }
}

TEST(SecondZagreb, InvariantUnderRelabeling) {
  std::mt19937 rng(11);
  for (const auto& g : sample_graphs()) {
    const auto m2 = second_zagreb(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = 0; i < 100; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto h = relabel(g, perm);
      EXPECT_EQ(second_zagreb(h), m2);
      EXPECT_EQ(degree_sequence_of(h), degree_sequence_of(g));
    }
  }
}

TEST(DegreeSequenceOf, Examples) {
  EXPECT_EQ(degree_sequence_of(star(5)).to_string(), "4,1,1,1,1");
  EXPECT_EQ(degree_sequence_of(build_b_pq(3, 3)).to_string(), "4,2,2,2,2");
  EXPECT_EQ(degree_sequence_of(testing::load_graph("plateau_gap_layered.txt")).to_string(),
            "4,4,3,3,2,1,1");
  EXPECT_THROW(degree_sequence_of(make(3, {{1, 2}})), DomainError);
}

TEST(IsConnected, Examples) {
  EXPECT_TRUE(is_connected(make(4, {{1, 2}, {2, 3}, {3, 4}})));
  EXPECT_FALSE(is_connected(make(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})));
}

TEST(IsConnected, EdgeCountMatchesExcess) {
  for (const auto& g : sample_graphs()) {
    ASSERT_TRUE(is_connected(g));
    const auto cls = classify(degree_sequence_of(g));
    EXPECT_EQ(static_cast<int>(g.size()), g.order() + cls.excess);
  }
}

TEST(EdgeList, ParsesTriangle) {
  const auto g = parse_edge_list("3 3\n1 2\n2 3\n1 3");
  EXPECT_EQ(g, cycle(3));
}

TEST(EdgeList, RoundTripIsCanonical) {
  const std::string messy = "4 3\n\n3 1\n2 1\n  4 3 \n";
  const auto g = parse_edge_list(messy);
  EXPECT_EQ(serialize_edge_list(g), "4 3\n1 2\n1 3\n3 4\n");
  EXPECT_EQ(parse_edge_list(serialize_edge_list(g)), g);
  for (const auto& h : sample_graphs()) {
    EXPECT_EQ(parse_edge_list(serialize_edge_list(h)), h);
  }
  EXPECT_EQ(serialize_edge_list(testing::load_graph("plateau_gap_layered.txt")),
            testing::read_fixture("plateau_gap_layered.txt"));
}

TEST(EdgeList, Errors) {
  for (const char* bad : {"", "3\n1 2", "3 1\n1 1", "3 2\n1 2\n2 1", "3 1\n1 4",
                          "3 1\n0 1", "3 2\n1 2", "3 1\n1 2\n2 3", "3 1\n1 x",
                          "3 1\n1 2 3", "x 1\n1 2"}) {
    EXPECT_THROW(parse_edge_list(bad), ParseError) << '"' << bad << '"';
  }
}

TEST(Dot, TriangleStructure) {
  const auto dot = to_dot(cycle(3));
  EXPECT_EQ(dot, "graph G {\n  1;\n  2;\n  3;\n  1 -- 2;\n  1 -- 3;\n  2 -- 3;\n}\n");
  EXPECT_EQ(std::count(dot.begin(), dot.end(), '\n'), 8);
}

TEST(Canonical, IsLabelInvariant) {
  std::mt19937 rng(3);
  for (const auto& g : sample_graphs()) {
    const auto form = canonical_form(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 1);
    for (int i = 0; i < 20; ++i) {
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(canonical_form(relabel(g, perm)), form);
    }
  }
}

TEST(Canonical, SeparatesNonIsomorphicGraphs) {
  const auto graphs = sample_graphs();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    for (std::size_t j = i + 1; j < graphs.size(); ++j) {
      EXPECT_FALSE(are_isomorphic(graphs[i], graphs[j])) << i << " " << j;
    }
  }
  // Same degree sequence (3,3,2,2,2,2): theta vs two triangles joined by an edge.
  EXPECT_FALSE(are_isomorphic(build_theta(3, 3, 1), build_b_prq(3, 1, 3)));
  // Regular graphs that refinement alone cannot split: C6 vs two triangles.
  const auto two_triangles = make(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
  EXPECT_FALSE(are_isomorphic(cycle(6), two_triangles));
  EXPECT_TRUE(are_isomorphic(build_b_pq(3, 4), build_b_pq(4, 3)));
}

TEST(Canonical, FormIsAnIsomorphicCopy) {
  for (const auto& g : sample_graphs()) {
    const auto form = canonical_form(g);
    const SimpleGraph h(g.order(), form);
    EXPECT_TRUE(are_isomorphic(g, h));
    EXPECT_EQ(second_zagreb(h), second_zagreb(g));
  }
}

}  // namespace
}  // namespace zagreb
