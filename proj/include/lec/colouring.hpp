#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lec/graph.hpp"
#include "lec/list_assignment.hpp"

namespace lec {

/// φ(e) per EdgeId; nullopt marks an uncoloured edge.
using PartialEdgeColouring = std::vector<std::optional<Colour>>;

struct TotalColouring {
  VertexColouring vertex_colours;
  std::vector<Colour> edge_colours;

  friend bool operator==(const TotalColouring&, const TotalColouring&) = default;
};

/// First violated clause of a colouring check, with its locations.
struct Violation {
  std::string clause;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
  std::string message;
};

/// nullopt means the colouring passed.
using CheckResult = std::optional<Violation>;

// The checkers below deliberately share no code with the solver: they compare
// every pair of incident items directly.

/// Lists plus properness. With `require_complete` every edge must be coloured.
CheckResult check_edge_colouring(const Graph& g, const ListAssignment& lists,
                                 const PartialEdgeColouring& col, bool require_complete = true);
CheckResult check_edge_colouring(const Graph& g, const ListAssignment& lists,
                                 const std::vector<Colour>& col);
/// Properness only (no lists).
CheckResult check_edge_properness(const Graph& g, const PartialEdgeColouring& col);

/// Clauses: lists, incident edges, adjacent vertices, vertex against incident edge.
CheckResult check_total_colouring(const Graph& g, const TotalListAssignment& lists,
                                  const TotalColouring& tc);
CheckResult check_total_properness(const Graph& g, const TotalColouring& tc);

std::vector<Colour> complete_colouring(const PartialEdgeColouring& col);
PartialEdgeColouring as_partial(const std::vector<Colour>& col);

/// A proper partial L-colouring together with a per-vertex colour -> edge
/// index, so "which edge at v has colour c" is O(1). Holds references to the
/// graph and lists, which must outlive it.
class EdgeColouringState {
 public:
  EdgeColouringState(const Graph& g, const ListAssignment& lists);
  /// Throws InputError if `col` is improper or leaves a list.
  EdgeColouringState(const Graph& g, const ListAssignment& lists, const PartialEdgeColouring& col);

  const Graph& graph() const { return *graph_; }
  const ListAssignment& lists() const { return *lists_; }
  const PartialEdgeColouring& colouring() const { return col_; }

  std::optional<Colour> colour(EdgeId e) const { return col_[e]; }
  std::optional<EdgeId> edge_with(VertexId v, Colour c) const;
  bool missing(VertexId v, Colour c) const { return !edge_with(v, c).has_value(); }
  std::size_t coloured_degree(VertexId v) const { return coloured_degree_[v]; }
  std::size_t coloured_count() const { return coloured_count_; }

  /// Colours an uncoloured edge. Throws InvariantError if that would break
  /// properness or leave the list.
  void assign(EdgeId e, Colour c);
  void clear(EdgeId e);

 private:
  std::optional<std::uint32_t> slot(Colour c) const;

  const Graph* graph_;
  const ListAssignment* lists_;
  PartialEdgeColouring col_;
  std::unordered_map<Colour, std::uint32_t> palette_;
  std::vector<EdgeId> table_;
  std::vector<std::uint32_t> coloured_degree_;
  std::size_t coloured_count_ = 0;
};

}  // namespace lec
