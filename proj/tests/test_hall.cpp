#include <gtest/gtest.h>

#include "lec/errors.hpp"
#include "lec/exact_oracle.hpp"
#include "lec/hall.hpp"
#include "support/catalogue.hpp"
#include "support/oracles.hpp"

using namespace lec;

TEST(Hall, EdgeConditionExamples) {
  const Graph e = path_graph(2);
  EXPECT_TRUE(check_hall_edge_condition(e, ListAssignment(std::vector<ColourList>{{1}})).satisfied);
  const Graph k3 = complete_graph(3);
  const auto bad = check_hall_edge_condition(k3, ListAssignment(std::vector<ColourList>(3, {1})));
  EXPECT_FALSE(bad.satisfied);
  EXPECT_EQ(bad.witness, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(bad.demand, 3u);
  EXPECT_EQ(bad.supply, 1u);
  EXPECT_TRUE(check_hall_edge_condition(k3, ListAssignment(std::vector<ColourList>(3, {1, 2, 3}))).satisfied);
}

TEST(Hall, NonInducedSubgraphCanViolate) {
  // Every induced subgraph of this triangle passes; the path ab, bc does not.
  const Graph k3 = complete_graph(3);
  const ListAssignment l(std::vector<ColourList>{{1}, {2, 3}, {1}});
  const auto c = check_hall_edge_condition(k3, l);
  EXPECT_FALSE(c.satisfied);
  EXPECT_EQ(c.demand, 2u);
  EXPECT_EQ(c.supply, 1u);
  EXPECT_EQ(c.witness_edges.size(), 2u);
}

TEST(Hall, EdgeConditionMatchesBruteForce) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : testkit::all_graphs(n)) {
      if (g.num_edges() == 0 || g.num_edges() > 8) continue;
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const std::size_t k = 1 + seed % 3;
        const auto l = random_lists(g, k, k + 1, seed + 10 * n);
        EXPECT_EQ(check_hall_edge_condition(g, l).satisfied, testkit::brute_hall_edge_condition(g, l));
      }
    }
  }
}

TEST(Hall, ColourableImpliesHall) {
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : testkit::connected_graphs(n)) {
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const std::size_t k = max_degree(g);
        const auto l = random_lists(g, k, k + 2, seed);
        if (list_edge_colourable(g, l).verdict == Verdict::yes) {
          EXPECT_TRUE(check_hall_edge_condition(g, l).satisfied);
        }
      }
    }
  }
}

TEST(Hall, IndexExamples) {
  EXPECT_EQ(hall_condition_index(path_graph(2)).value, 1u);
  const auto c5 = hall_condition_index(cycle_graph(5));
  EXPECT_EQ(c5.value, 3u);
  EXPECT_EQ(c5.witness, (std::vector<VertexId>{0, 1, 2, 3, 4}));
  EXPECT_EQ(c5.numerator, 5u);
  EXPECT_EQ(c5.denominator, 2u);
  const auto k4 = hall_condition_index(complete_graph(4));
  EXPECT_EQ(k4.value, 3u);
  EXPECT_EQ(k4.witness, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(hall_condition_index(Graph(3, {})).value, 0u);
  EXPECT_THROW(hall_condition_index(Graph(17, {})), GuardExceeded);
}

TEST(Hall, IndexViaListsExamples) {
  EXPECT_EQ(hall_condition_index_via_lists(path_graph(2)), 1u);
  EXPECT_EQ(hall_condition_index_via_lists(cycle_graph(5)), 3u);
  EXPECT_EQ(hall_condition_index_via_lists(complete_graph(3)), 3u);
  EXPECT_EQ(hall_condition_index_via_lists(Graph(2, {})), 0u);
}

TEST(Hall, IndexAgreesWithBruteEnumeration) {
  for (std::size_t n = 2; n <= 6; ++n)
    for (const Graph& g : testkit::all_graphs(n))
      if (g.num_edges() <= 10) {
        EXPECT_EQ(hall_condition_index(g).value, testkit::brute_hall_index(g));
      }
}

TEST(Hall, WitnessMatchesValue) {
  for (const Graph& g : testkit::connected_graphs(6)) {
    const auto r = hall_condition_index(g);
    ASSERT_GT(r.denominator, 0u);
    EXPECT_EQ(r.value, (r.numerator + r.denominator - 1) / r.denominator);
    if (!r.witness_edges.empty()) {
      // A star: one shared endpoint, matching number 1.
      EXPECT_EQ(r.denominator, 1u);
      EXPECT_EQ(r.witness_edges.size(), r.numerator);
      const Edge first = g.edge(r.witness_edges.front());
      const VertexId centre = g.edge(r.witness_edges.back()).has(first.u) ? first.u : first.v;
      for (EdgeId e : r.witness_edges) EXPECT_TRUE(g.edge(e).has(centre));
      continue;
    }
    std::size_t inside = 0;
    for (const Edge& e : g.edges()) {
      const bool u = std::count(r.witness.begin(), r.witness.end(), e.u) > 0;
      const bool v = std::count(r.witness.begin(), r.witness.end(), e.v) > 0;
      inside += u && v;
    }
    EXPECT_EQ(inside, r.numerator);
  }
}

TEST(Hall, TotalConditionMatchesBruteForce) {
  std::size_t violated = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (const Graph& g : testkit::all_graphs(n)) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        const std::size_t k = 1 + (seed + n) % 3;
        const auto l = random_total_lists(g, k, k + 2, 31 * seed + n);
        const bool got = check_hall_total_condition(g, l).satisfied;
        EXPECT_EQ(got, testkit::brute_hall_total_condition(g, l));
        violated += !got;
      }
    }
  }
  EXPECT_GT(violated, 0u);
}

TEST(Hall, TotalNumberAgreesWithBruteEnumeration) {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const Graph& g : testkit::all_graphs(n)) {
      if (n + g.num_edges() > 12) continue;
      EXPECT_EQ(total_hall_condition_number(g).value, testkit::brute_total_hall_number(g));
    }
  }
}

TEST(Hall, TotalStarReachesDeltaPlusOne) {
  const Graph star = complete_bipartite_graph(1, 3);
  EXPECT_EQ(total_hall_condition_number(star).value, 4u);
  EXPECT_EQ(total_hall_condition_number_via_lists(star), 4u);
  // Uniform lists of size 3 fail on the centre and its three edges.
  const auto c = check_hall_total_condition(star, uniform_total_lists(star, 3));
  EXPECT_FALSE(c.satisfied);
  EXPECT_EQ(c.demand, 4u);
  EXPECT_EQ(c.supply, 3u);
}

TEST(Hall, StarWitnessWhenInducedSubgraphsFallShort) {
  // A vertex of degree 4 whose neighbourhood contains one edge: every induced
  // subgraph has ratio at most 3, the star has 4.
  const Graph g(5, {{0, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
  const auto r = hall_condition_index(g);
  EXPECT_EQ(r.value, 4u);
  EXPECT_EQ(r.witness_edges, (std::vector<EdgeId>{1, 2, 3, 4}));
  EXPECT_EQ(hall_condition_index_via_lists(g), 4u);
  EXPECT_EQ(testkit::brute_hall_index(g), 4u);
}

TEST(Hall, TotalConditionExamples) {
  const Graph one(1, {});
  EXPECT_TRUE(check_hall_total_condition(one, TotalListAssignment{ListAssignment{}, {{1}}}).satisfied);
  const Graph e = path_graph(2);
  EXPECT_FALSE(
      check_hall_total_condition(e, TotalListAssignment{ListAssignment(std::vector<ColourList>{{1}}), {{1}, {1}}}).satisfied);
  const Graph k3 = complete_graph(3);
  TotalListAssignment l{ListAssignment(std::vector<ColourList>(3, {1, 2, 3})),
                        std::vector<ColourList>(3, {1, 2, 3})};
  EXPECT_TRUE(check_hall_total_condition(k3, l).satisfied);
}

TEST(Hall, TotalNumberExamples) {
  EXPECT_EQ(total_hall_condition_number(Graph(1, {})).value, 1u);
  const auto e = total_hall_condition_number(path_graph(2));
  EXPECT_EQ(e.value, 3u);
  EXPECT_EQ(e.denominator, 1u);
  const auto k3 = total_hall_condition_number(complete_graph(3));
  EXPECT_EQ(k3.value, 3u);
  // The three pairwise adjacent vertices are the first set reaching 3.
  EXPECT_EQ(k3.witness, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(k3.witness_edges.empty());
  EXPECT_EQ(k3.numerator, 3u);
  EXPECT_EQ(k3.denominator, 1u);
  EXPECT_EQ(total_hall_condition_number_via_lists(complete_graph(3)), 3u);
  EXPECT_EQ(total_hall_condition_number_via_lists(path_graph(2)), 3u);
}

TEST(Hall, ConnectedRestrictionMatchesFullScan) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const Graph& g : testkit::all_graphs(n)) {
      EXPECT_EQ(hall_condition_index(g, 16, true).value, hall_condition_index(g, 16, false).value);
      EXPECT_EQ(total_hall_condition_number(g, 24, true).value,
                total_hall_condition_number(g, 24, false).value);
    }
  }
}
