#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lec/graph.hpp"
#include "lec/list_assignment.hpp"

namespace lec {

struct OracleBudget {
  std::uint64_t node_limit = 100'000'000;
  std::optional<std::chrono::milliseconds> timeout;
};

enum class Verdict { yes, no, budget_exceeded };

struct ColourabilityResult {
  Verdict verdict = Verdict::no;
  std::optional<std::vector<Colour>> witness;  // set iff verdict == yes
  std::uint64_t nodes = 0;
};

/// Exhaustive backtracking over edges in ascending id with forward checking.
ColourabilityResult list_edge_colourable(const Graph& g, const ListAssignment& lists,
                                         const OracleBudget& budget = {});

/// χ′(g). Tries Δ, then Δ+1. Throws GuardExceeded above `edge_guard` edges and
/// BudgetExceeded when the search does not finish.
std::size_t chromatic_index(const Graph& g, const OracleBudget& budget = {},
                            std::size_t edge_guard = 24);

/// Least k admitting a colouring from {0..k-1} with at most two edges of any
/// colour at each vertex.
std::size_t improper2_chromatic_index(const Graph& g, const OracleBudget& budget = {},
                                      std::size_t edge_guard = 24);

/// Maximum matching size.
std::size_t matching_number(const Graph& g);
/// Maximum matching using only edges with edge_allowed[e].
std::size_t matching_number(const Graph& g, const std::vector<bool>& edge_allowed);

/// α_T(g): the largest set of vertices and edges, no two adjacent or incident.
/// Throws GuardExceeded above `vertex_guard` vertices.
std::size_t total_independence_number(const Graph& g, std::size_t vertex_guard = 20);
/// α_T restricted to the allowed vertices and edges.
std::size_t total_independence_number(const Graph& g, const std::vector<bool>& vertex_allowed,
                                      const std::vector<bool>& edge_allowed,
                                      std::size_t vertex_guard = 20);

}  // namespace lec
