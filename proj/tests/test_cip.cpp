#include <gtest/gtest.h>

#include <sstream>

#include "lec/errors.hpp"
#include "lec/cip.hpp"
#include "lec/fan_solver.hpp"
#include "support/instances.hpp"

using namespace lec;

namespace {

// u=0, v=1, w=2; edge 0 = uv coloured 1, edge 1 = vw coloured 2.
struct PathFixture {
  Graph g = Graph(3, {{0, 1}, {1, 2}});
  PartialEdgeColouring col{1, 2};
};

Cip find(const Graph& g, const ListAssignment& l, const PartialEdgeColouring& col, VertexId p1,
         EdgeId e, std::optional<VertexId> w = std::nullopt, ForbiddenChoice f = {}) {
  return find_cip(g, l, col, CipQuery{p1, e, *col[e], w, std::move(f)});
}

}  // namespace

TEST(Cip, SingleEdge) {
  const Graph g(2, {{0, 1}});
  const ListAssignment l({{1, 2, 3, 4}});
  const Cip c = find(g, l, {1}, 0, 0);
  EXPECT_EQ(c.path, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(c.colours, (std::vector<Colour>{1, 2}));
  EXPECT_EQ(apply_interchange(g, l, {1}, c), (PartialEdgeColouring{2}));
}

TEST(Cip, BlockedColourIsSkipped) {
  PathFixture f;
  const ListAssignment l({{1, 2, 3}, {2, 3, 4}});
  const Cip c = find(f.g, l, f.col, 0, 0);
  EXPECT_EQ(c.length(), 2u);
  EXPECT_EQ(c.colours, (std::vector<Colour>{1, 3}));
}

TEST(Cip, ForcedContinuation) {
  PathFixture f;
  const ListAssignment l({{1, 2}, {2, 3, 4}});
  const Cip c = find(f.g, l, f.col, 0, 0);
  EXPECT_EQ(c.path, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(c.colours, (std::vector<Colour>{1, 2, 3}));
  const auto after = apply_interchange(f.g, l, f.col, c);
  EXPECT_EQ(after, (PartialEdgeColouring{2, 3}));
  EXPECT_FALSE(check_edge_colouring(f.g, l, after));
  // The reversed path undoes the interchange.
  const Cip back = reverse_cip(c);
  EXPECT_FALSE(validate_cip(f.g, l, after, back));
  EXPECT_EQ(apply_interchange(f.g, l, after, back), f.col);
}

TEST(Cip, NoCipWithTinyLists) {
  PathFixture f;
  const ListAssignment l({{1, 2}, {2}});
  EXPECT_THROW(find(f.g, l, f.col, 0, 0), NoCipFound);
  const auto r = search_cip(EdgeColouringState(f.g, l, f.col), CipQuery{0, 0, 1});
  EXPECT_FALSE(r.cip);
  EXPECT_FALSE(r.budget_exhausted);
  EXPECT_GT(r.nodes, 0u);
}

TEST(Cip, NodeLimitIsReported) {
  PathFixture f;
  const ListAssignment l({{1, 2}, {2}});
  CipQuery q{0, 0, 1};
  q.node_limit = 0;
  const auto r = search_cip(EdgeColouringState(f.g, l, f.col), q);
  EXPECT_FALSE(r.cip);
  EXPECT_TRUE(r.budget_exhausted);
}

TEST(Cip, MalformedQueries) {
  PathFixture f;
  const ListAssignment l({{1, 2, 3}, {2, 3, 4}});
  const EdgeColouringState s(f.g, l, f.col);
  EXPECT_THROW(search_cip(s, CipQuery{0, 5, 1}), InputError);
  EXPECT_THROW(search_cip(s, CipQuery{2, 0, 1}), InputError);
  EXPECT_THROW(search_cip(s, CipQuery{0, 0, 2}), InputError);
  EXPECT_THROW(search_cip(s, CipQuery{0, 0, 1, VertexId{1}}), InputError);
  ForbiddenChoice far;
  far.incoming[0] = {3};
  EXPECT_THROW(search_cip(s, CipQuery{0, 0, 1, std::nullopt, far}), InputError);
}

TEST(Cip, ValidateReportsTampering) {
  PathFixture f;
  const ListAssignment l({{1, 2}, {2, 3, 4}});
  const Cip c = find(f.g, l, f.col, 0, 0);
  ASSERT_FALSE(validate_cip(f.g, l, f.col, c));

  Cip bad_list = c;
  bad_list.colours[1] = 9;
  auto v = validate_cip(f.g, l, f.col, bad_list);
  ASSERT_TRUE(v);
  EXPECT_EQ(v->clause, "list");

  Cip repeated = c;
  repeated.path[2] = 0;
  auto d = validate_cip(f.g, l, f.col, repeated);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->clause, "distinct");

  Cip early = c;
  early.path.pop_back();
  early.edges.pop_back();
  early.colours.pop_back();
  auto t = validate_cip(f.g, l, f.col, early);
  ASSERT_TRUE(t);
  EXPECT_EQ(t->clause, "second-colouring");
  EXPECT_THROW(apply_interchange(f.g, l, f.col, early), InvariantError);
}

TEST(Cip, CutShapes) {
  Cip c;
  c.path = {0, 1, 2, 3};
  c.edges = {0, 1, 2};
  c.colours = {1, 2, 3, 4};
  auto [head, tail] = cut_cip(c, 2);
  EXPECT_EQ(head.path, (std::vector<VertexId>{0, 1}));
  EXPECT_EQ(head.colours, (std::vector<Colour>{1, 2}));
  EXPECT_EQ(tail.path, (std::vector<VertexId>{1, 2, 3}));
  EXPECT_EQ(tail.colours, (std::vector<Colour>{2, 3, 4}));
  Cip alt = c;
  alt.colours = {1, 2, 1, 2};
  EXPECT_THROW(cut_cip(alt, 2), InputError);
  EXPECT_THROW(cut_cip(c, 1), InputError);
  EXPECT_THROW(cut_cip(c, 4), InputError);
}

TEST(Cip, CutPartsValidateOnConcretePath) {
  // Path 0-1-2-3 coloured 1,2,5 with a pendant edge 1-4 coloured 6 and
  // 2-5 coloured 7 so that the search must walk the whole path.
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {1, 4}, {2, 5}});
  const ListAssignment l({{1, 2}, {2, 5}, {5, 6, 7}, {6}, {7}});
  const PartialEdgeColouring col{1, 2, 5, 6, 7};
  const Cip c = find(g, l, col, 0, 0);
  ASSERT_EQ(c.colours, (std::vector<Colour>{1, 2, 5, 6}));
  auto [head, tail] = cut_cip(c, 2);
  EXPECT_FALSE(validate_cip(g, l, col, tail));
  const auto after_tail = apply_interchange(g, l, col, tail);
  EXPECT_FALSE(validate_cip(g, l, after_tail, head));
  auto [head3, tail3] = cut_cip(c, 3);
  EXPECT_FALSE(validate_cip(g, l, col, tail3));
  EXPECT_FALSE(validate_cip(g, l, apply_interchange(g, l, col, tail3), head3));
}

TEST(Cip, TraceFormat) {
  PathFixture f;
  const ListAssignment l({{1, 2}, {2, 3, 4}});
  std::ostringstream out;
  TextCipTracer tracer(out);
  find_cip(f.g, l, f.col, CipQuery{0, 0, 1}, &tracer);
  EXPECT_EQ(out.str(), "PUSH 0 1\nPUSH 1 2\nPUSH 2 3\nACCEPT s=3\n{\"path\":[0,1,2],\"colours\":[1,2,3]}\n");
  EXPECT_NE(cip_to_dot(find(f.g, l, f.col, 0, 0)).find("0 -- 1 [label=\"1/2\"]"), std::string::npos);
}

TEST(Cip, RestrictionKeepsPathAwayFromW) {
  std::size_t checked = 0;
  for (std::uint64_t i = 0; i < 300; ++i) {
    auto inst = testkit::random_instance(21, i, 10, 2, 2);
    const Graph& g = inst.graph;
    if (g.num_edges() == 0) continue;
    const auto col = as_partial(colour_edges(g, inst.lists).colouring);
    const EdgeColouringState state(g, inst.lists, col);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [p1, p2] = g.edge(e);
      for (VertexId w = 0; w < g.num_vertices(); ++w) {
        if (w == p1 || w == p2) continue;
        ForbiddenChoice bans;
        for (const auto& inc : g.incident(w)) bans.incoming[inc.neighbour].push_back(*col[inc.edge]);
        const auto r = search_cip(state, CipQuery{p1, e, *col[e], w, bans});
        ASSERT_TRUE(r.cip) << "instance " << i;
        EXPECT_EQ(std::count(r.cip->path.begin(), r.cip->path.end(), w), 0);
        EXPECT_FALSE(validate_cip(g, inst.lists, col, *r.cip, &bans));
        const auto after = apply_interchange(g, inst.lists, col, *r.cip);
        EXPECT_FALSE(check_edge_colouring(g, inst.lists, after));
        EXPECT_TRUE(EdgeColouringState(g, inst.lists, after).missing(p1, *col[e]));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(Cip, GainBansAreHonoured) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    auto inst = testkit::random_instance(22, i, 9, 2, 1);
    const Graph& g = inst.graph;
    if (g.num_edges() < 2) continue;
    const auto col = as_partial(colour_edges(g, inst.lists).colouring);
    const EdgeColouringState state(g, inst.lists, col);
    const EdgeId e = static_cast<EdgeId>(i % g.num_edges());
    const auto [p1, p2] = g.edge(e);
    VertexId w = 0;
    while (w == p1 || w == p2) ++w;
    if (w >= g.num_vertices() || g.degree(w) == 0) continue;
    ForbiddenChoice bans;
    for (const auto& inc : g.incident(w)) {
      const Colour c = inst.lists[inc.edge].front() == *col[inc.edge] ? inst.lists[inc.edge].back()
                                                                       : inst.lists[inc.edge].front();
      bans.gained[inc.neighbour].push_back(c);
    }
    const auto r = search_cip(state, CipQuery{p1, e, *col[e], w, bans});
    if (!r.cip) continue;
    ASSERT_FALSE(validate_cip(g, inst.lists, col, *r.cip, &bans));
    const auto after = apply_interchange(g, inst.lists, col, *r.cip);
    const EdgeColouringState before_state(g, inst.lists, col);
    const EdgeColouringState after_state(g, inst.lists, after);
    for (const auto& [x, colours] : bans.gained)
      for (Colour c : colours)
        if (before_state.missing(x, c)) {
          EXPECT_TRUE(after_state.missing(x, c)) << "instance " << i;
        }
  }
}

TEST(Cip, SearchIsDeterministic) {
  auto inst = testkit::random_instance(23, 4, 12, 2, 0);
  const auto col = as_partial(colour_edges(inst.graph, inst.lists).colouring);
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    const VertexId p1 = inst.graph.edge(e).u;
    EXPECT_EQ(find(inst.graph, inst.lists, col, p1, e), find(inst.graph, inst.lists, col, p1, e));
  }
}
