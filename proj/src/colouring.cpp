#include "lec/colouring.hpp"

#include <limits>

#include "lec/errors.hpp"

namespace lec {

namespace {

constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

Violation violation(std::string clause, std::vector<EdgeId> edges, std::vector<VertexId> vertices,
                    std::string message) {
  return Violation{std::move(clause), std::move(edges), std::move(vertices), std::move(message)};
}

std::string str(std::size_t x) { return std::to_string(x); }

}  // namespace

CheckResult check_edge_properness(const Graph& g, const PartialEdgeColouring& col) {
  if (col.size() != g.num_edges()) {
    return violation("size", {}, {}, "colouring has " + str(col.size()) + " entries for " +
                                         str(g.num_edges()) + " edges");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    auto inc = g.incident(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
      for (std::size_t j = i + 1; j < inc.size(); ++j) {
        const auto& a = col[inc[i].edge];
        const auto& b = col[inc[j].edge];
        if (a && b && *a == *b) {
          return violation("incident-edges", {inc[i].edge, inc[j].edge}, {v},
                           "edges " + str(inc[i].edge) + " and " + str(inc[j].edge) +
                               " share vertex " + str(v) + " and colour " + str(*a));
        }
      }
    }
  }
  return std::nullopt;
}

CheckResult check_edge_colouring(const Graph& g, const ListAssignment& lists,
                                 const PartialEdgeColouring& col, bool require_complete) {
  if (lists.size() != g.num_edges()) {
    return violation("size", {}, {}, "list assignment does not match the graph");
  }
  if (col.size() != g.num_edges()) {
    return violation("size", {}, {}, "colouring does not match the graph");
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!col[e]) {
      if (require_complete) {
        return violation("uncoloured", {e}, {}, "edge " + str(e) + " is uncoloured");
      }
      continue;
    }
    bool found = false;
    for (Colour c : lists[e]) found = found || c == *col[e];
    if (!found) {
      return violation("list", {e}, {}, "edge " + str(e) + " has colour " + str(*col[e]) +
                                            " outside its list");
    }
  }
  return check_edge_properness(g, col);
}

CheckResult check_edge_colouring(const Graph& g, const ListAssignment& lists,
                                 const std::vector<Colour>& col) {
  return check_edge_colouring(g, lists, as_partial(col), true);
}

CheckResult check_total_properness(const Graph& g, const TotalColouring& tc) {
  if (tc.edge_colours.size() != g.num_edges() || tc.vertex_colours.size() != g.num_vertices()) {
    return violation("size", {}, {}, "total colouring does not match the graph");
  }
  if (auto r = check_edge_properness(g, as_partial(tc.edge_colours))) return r;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (tc.vertex_colours[u] == tc.vertex_colours[v]) {
      return violation("adjacent-vertices", {e}, {u, v},
                       "adjacent vertices " + str(u) + " and " + str(v) + " share colour " +
                           str(tc.vertex_colours[u]));
    }
    for (VertexId x : {u, v}) {
      if (tc.vertex_colours[x] == tc.edge_colours[e]) {
        return violation("vertex-edge", {e}, {x},
                         "vertex " + str(x) + " and incident edge " + str(e) + " share colour " +
                             str(tc.edge_colours[e]));
      }
    }
  }
  return std::nullopt;
}

CheckResult check_total_colouring(const Graph& g, const TotalListAssignment& lists,
                                  const TotalColouring& tc) {
  if (lists.edge_lists.size() != g.num_edges() || lists.vertex_lists.size() != g.num_vertices()) {
    return violation("size", {}, {}, "total list assignment does not match the graph");
  }
  if (tc.edge_colours.size() != g.num_edges() || tc.vertex_colours.size() != g.num_vertices()) {
    return violation("size", {}, {}, "total colouring does not match the graph");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    bool found = false;
    for (Colour c : lists.vertex_lists[v]) found = found || c == tc.vertex_colours[v];
    if (!found) {
      return violation("list", {}, {v}, "vertex " + str(v) + " has colour " +
                                            str(tc.vertex_colours[v]) + " outside its list");
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    bool found = false;
    for (Colour c : lists.edge_lists[e]) found = found || c == tc.edge_colours[e];
    if (!found) {
      return violation("list", {e}, {}, "edge " + str(e) + " has colour " +
                                            str(tc.edge_colours[e]) + " outside its list");
    }
  }
  return check_total_properness(g, tc);
}

std::vector<Colour> complete_colouring(const PartialEdgeColouring& col) {
  std::vector<Colour> out;
  out.reserve(col.size());
  for (EdgeId e = 0; e < col.size(); ++e) {
    if (!col[e]) throw InvariantError("edge " + str(e) + " is uncoloured");
    out.push_back(*col[e]);
  }
  return out;
}

PartialEdgeColouring as_partial(const std::vector<Colour>& col) {
  return PartialEdgeColouring(col.begin(), col.end());
}

EdgeColouringState::EdgeColouringState(const Graph& g, const ListAssignment& lists)
    : graph_(&g), lists_(&lists), col_(g.num_edges()), coloured_degree_(g.num_vertices(), 0) {
  require_matching(g, lists);
  for (const auto& l : lists.lists())
    for (Colour c : l) palette_.emplace(c, static_cast<std::uint32_t>(palette_.size()));
  table_.assign(g.num_vertices() * palette_.size(), kNoEdge);
}

EdgeColouringState::EdgeColouringState(const Graph& g, const ListAssignment& lists,
                                       const PartialEdgeColouring& col)
    : EdgeColouringState(g, lists) {
  if (auto bad = check_edge_colouring(g, lists, col, false)) {
    throw InputError("initial colouring rejected: " + bad->message);
  }
  for (EdgeId e = 0; e < col.size(); ++e)
    if (col[e]) assign(e, *col[e]);
}

std::optional<std::uint32_t> EdgeColouringState::slot(Colour c) const {
  auto it = palette_.find(c);
  if (it == palette_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> EdgeColouringState::edge_with(VertexId v, Colour c) const {
  auto s = slot(c);
  if (!s) return std::nullopt;
  EdgeId e = table_[v * palette_.size() + *s];
  if (e == kNoEdge) return std::nullopt;
  return e;
}

void EdgeColouringState::assign(EdgeId e, Colour c) {
  if (col_[e]) throw InvariantError("edge " + str(e) + " is already coloured");
  auto s = slot(c);
  if (!s || !lists_->contains(e, c)) {
    throw InvariantError("colour " + str(c) + " is not in the list of edge " + str(e));
  }
  const auto [u, v] = graph_->edge(e);
  const std::size_t p = palette_.size();
  if (table_[u * p + *s] != kNoEdge || table_[v * p + *s] != kNoEdge) {
    throw InvariantError("colour " + str(c) + " on edge " + str(e) + " would clash");
  }
  table_[u * p + *s] = e;
  table_[v * p + *s] = e;
  col_[e] = c;
  ++coloured_degree_[u];
  ++coloured_degree_[v];
  ++coloured_count_;
}

void EdgeColouringState::clear(EdgeId e) {
  if (!col_[e]) return;
  auto s = *slot(*col_[e]);
  const auto [u, v] = graph_->edge(e);
  const std::size_t p = palette_.size();
  table_[u * p + s] = kNoEdge;
  table_[v * p + s] = kNoEdge;
  col_[e].reset();
  --coloured_degree_[u];
  --coloured_degree_[v];
  --coloured_count_;
}

}  // namespace lec
