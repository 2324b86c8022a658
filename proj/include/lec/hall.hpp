#pragma once

#include <cstddef>
#include <vector>

#include "lec/graph.hpp"
#include "lec/list_assignment.hpp"

namespace lec {

/// A condition number and the subgraph attaining it.
/// value = ceil(numerator / denominator). For s′ the witness is the subgraph
/// induced by `witness` unless `witness_edges` is non-empty, in which case it is
/// the star formed by those edges. For s_T the witness is exactly the vertices
/// in `witness` and the edges in `witness_edges`.
struct HallReport {
  std::size_t value = 0;
  std::vector<VertexId> witness;
  std::vector<EdgeId> witness_edges;
  std::size_t numerator = 0;    // |E(H)|, or |V(H)|+|E(H)| in the total case
  std::size_t denominator = 0;  // α′(H), or α_T(H)

  friend bool operator==(const HallReport&, const HallReport&) = default;
};

/// Outcome of a Hall condition check. When violated, `witness` holds the
/// vertices of the first subgraph (in subset order) with demand > supply. For
/// the edge condition `witness_edges` lists that subgraph's edges.
struct HallCheck {
  bool satisfied = true;
  std::vector<VertexId> witness;
  std::vector<EdgeId> witness_edges;
  std::size_t demand = 0;  // |E(H)| (or |V(H)|+|E(H)|) of the witness
  std::size_t supply = 0;  // the sum over colours of the witness
};

struct HallGuards {
  std::size_t edge_check = 22;  // edges
  std::size_t edge_index = 16;
  std::size_t edge_index_via_lists = 22;  // edges
  std::size_t total_check = 22;  // vertices plus edges
  std::size_t total_index = 24;  // vertices plus edges
  std::size_t total_index_via_lists = 22;  // vertices plus edges
};

/// Hall's edge-condition over every subgraph, scanned as edge subsets in
/// increasing bitmask order after a first pass over induced subgraphs. The
/// guard bounds the edge count (at most 26).
HallCheck check_hall_edge_condition(const Graph& g, const ListAssignment& lists,
                                    std::size_t guard = HallGuards{}.edge_check);

/// s′(g): max of ceil(|E(H)| / α′(H)) over the induced subgraphs H with an edge
/// and the stars at each vertex. Only connected vertex sets are scanned unless
/// `connected_only` is false. Ties go to the lexicographically smallest witness
/// vertex set, induced before star. 0 for an edgeless graph.
HallReport hall_condition_index(const Graph& g, std::size_t guard = HallGuards{}.edge_index,
                                bool connected_only = true);

/// s′₀(g): the least l for which the lists {0..l-1} satisfy Hall's edge-condition.
/// The guard bounds the edge count, as for check_hall_edge_condition.
std::size_t hall_condition_index_via_lists(const Graph& g,
                                           std::size_t guard = HallGuards{}.edge_index_via_lists);

/// Hall's total condition over every set of vertices and edges, vertex-induced
/// subgraphs first. The guard bounds |V|+|E| (at most 28).
HallCheck check_hall_total_condition(const Graph& g, const TotalListAssignment& lists,
                                     std::size_t guard = HallGuards{}.total_check);

/// s_T(g): max of ceil(|X| / α_T(X)) over the non-empty sets X of vertices and
/// edges. Only sets that are connected in the total graph are eligible unless
/// `connected_only` is false; the value is the same either way. Ties go to the
/// smallest set in bitmask order (vertex v is bit v, edge e is bit n+e). The
/// guard bounds |V|+|E| (at most 28).
HallReport total_hall_condition_number(const Graph& g,
                                       std::size_t guard = HallGuards{}.total_index,
                                       bool connected_only = true);

/// s_T₀(g): the least l for which uniform lists {0..l-1} satisfy the total condition.
std::size_t total_hall_condition_number_via_lists(
    const Graph& g, std::size_t guard = HallGuards{}.total_index_via_lists);

}  // namespace lec
