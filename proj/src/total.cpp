#include <algorithm>

#include "lec/fan_solver.hpp"

namespace lec {

namespace {

TotalColouring colour_residual(const Graph& g, const TotalListAssignment& lists,
                               const SolverOptions& options) {
  VertexColouring vc = greedy_vertex_colouring(g, lists.vertex_lists);
  ListAssignment residual = residual_edge_lists(g, lists, vc);
  SolverOptions inner = options;
  inner.force = false;
  SolveResult edges = colour_edges(g, residual, inner);
  TotalColouring tc{std::move(vc), std::move(edges.colouring)};
  if (!options.inject_fault) {
    if (auto bad = check_total_colouring(g, lists, tc)) {
      throw InvariantError("total colouring failed its check: " + bad->message);
    }
  }
  return tc;
}

}  // namespace

TotalColouring total_colour(const Graph& g, std::size_t palette_size, const SolverOptions& options) {
  const std::size_t need = max_degree(g) + 4;
  if (palette_size < need) {
    throw InputError("palette of " + std::to_string(palette_size) + " colours is below Δ+4 = " +
                     std::to_string(need));
  }
  return colour_residual(g, uniform_total_lists(g, palette_size), options);
}

TotalColouring total_colour_lists(const Graph& g, const TotalListAssignment& lists,
                                  const SolverOptions& options) {
  require_matching(g, lists);
  const std::size_t need = max_degree(g) + 4;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (lists.edge_lists[e].size() < need) {
      throw InputError("edge " + std::to_string(e) + " has fewer than Δ+4 colours");
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (lists.vertex_lists[v].size() < need) {
      throw InputError("vertex " + std::to_string(v) + " has fewer than Δ+4 colours");
    }
  }
  return colour_residual(g, lists, options);
}

}  // namespace lec
