#include <gtest/gtest.h>

#include "lec/errors.hpp"
#include "lec/colouring.hpp"
#include "lec/list_assignment.hpp"

using namespace lec;

TEST(Lists, Uniform) {
  const auto l = uniform_lists(complete_graph(3), 3);
  ASSERT_EQ(l.size(), 3u);
  for (EdgeId e = 0; e < 3; ++e) EXPECT_EQ(l[e], (ColourList{0, 1, 2}));
  EXPECT_EQ(uniform_lists(Graph(4, {}), 5).size(), 0u);
  const auto p = uniform_lists(path_graph(3), 2);
  EXPECT_EQ(p[0], (ColourList{0, 1}));
  EXPECT_EQ(p[1], (ColourList{0, 1}));
}

TEST(Lists, NormalisesAndRejectsRepeats) {
  ListAssignment l({{3, 1, 2}});
  EXPECT_EQ(l[0], (ColourList{1, 2, 3}));
  EXPECT_TRUE(l.contains(0, 2));
  EXPECT_FALSE(l.contains(0, 4));
  EXPECT_THROW(ListAssignment({{1, 1}}), InputError);
  EXPECT_THROW(require_matching(complete_graph(3), uniform_lists(path_graph(3), 2)), InputError);
}

TEST(Lists, Random) {
  const Graph k4 = complete_graph(4);
  const auto l = random_lists(k4, 5, 15, 7);
  for (EdgeId e = 0; e < 6; ++e) {
    EXPECT_EQ(l[e].size(), 5u);
    for (Colour c : l[e]) EXPECT_LT(c, 15u);
  }
  EXPECT_EQ(l, random_lists(k4, 5, 15, 7));
  EXPECT_NE(l, random_lists(k4, 5, 15, 8));
  EXPECT_THROW(random_lists(k4, 5, 4, 1), InputError);
}

TEST(Lists, RandomSubsetsCoverThePalette) {
  const Graph g = complete_graph(8);
  const auto l = random_lists(g, 3, 6, 11);
  std::vector<int> seen(6, 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    for (Colour c : l[e]) ++seen[c];
  for (int s : seen) EXPECT_GT(s, 0);
}

TEST(Lists, Residual) {
  const Graph e = path_graph(2);
  TotalListAssignment t{ListAssignment({{0, 1, 2, 3}}), {{0, 5}, {1, 6}}};
  EXPECT_EQ(residual_edge_lists(e, t, {0, 1})[0], (ColourList{2, 3}));
  TotalListAssignment far{ListAssignment({{0, 1, 2, 3}}), {{7}, {8}}};
  EXPECT_EQ(residual_edge_lists(e, far, {7, 8})[0], (ColourList{0, 1, 2, 3}));
  EXPECT_THROW(residual_edge_lists(e, t, {0}), InputError);
  EXPECT_THROW(residual_edge_lists(e, t, {3, 1}), InputError);

  const Graph k3 = complete_graph(3);
  const auto u = uniform_total_lists(k3, 6);
  const auto r = residual_edge_lists(k3, u, {0, 1, 2});
  for (EdgeId f = 0; f < 3; ++f) EXPECT_EQ(r[f].size(), 4u);
}

TEST(Lists, ResidualShrinksByAtMostTwo) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(12, 0.4, seed);
    const std::size_t k = max_degree(g) + 4;
    const auto t = random_total_lists(g, k, 2 * k, seed);
    const auto vc = greedy_vertex_colouring(g, t.vertex_lists);
    const auto r = residual_edge_lists(g, t, vc);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      EXPECT_GE(r[e].size() + 2, t.edge_lists[e].size());
      EXPECT_LE(r[e].size(), t.edge_lists[e].size());
    }
  }
}

TEST(Lists, Greedy) {
  const Graph k3 = complete_graph(3);
  const std::vector<ColourList> three(3, ColourList{0, 1, 2});
  EXPECT_EQ(greedy_vertex_colouring(k3, three), (VertexColouring{0, 1, 2}));
  const std::vector<ColourList> five(4, ColourList{5});
  EXPECT_EQ(greedy_vertex_colouring(Graph(4, {}), five), (VertexColouring{5, 5, 5, 5}));
  const Graph c5 = cycle_graph(5);
  const std::vector<ColourList> l5(5, ColourList{0, 1, 2});
  const auto vc = greedy_vertex_colouring(c5, l5);
  for (const Edge& e : c5.edges()) EXPECT_NE(vc[e.u], vc[e.v]);
  const std::vector<ColourList> two(3, ColourList{0, 1});
  try {
    greedy_vertex_colouring(k3, two);
    FAIL();
  } catch (const GreedyColouringStuck& e) {
    EXPECT_EQ(e.vertex(), 2u);
  }
}
