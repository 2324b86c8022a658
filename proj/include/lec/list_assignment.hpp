#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lec/errors.hpp"
#include "lec/graph.hpp"

namespace lec {

/// Colours are plain non-negative integers; a palette is just a size.
using Colour = std::uint32_t;

/// A duplicate-free colour set kept in ascending order.
using ColourList = std::vector<Colour>;

/// Per-edge colour lists L(e), indexed by EdgeId.
class ListAssignment {
 public:
  ListAssignment() = default;
  /// Sorts each list. Throws InputError when a list repeats a colour.
  explicit ListAssignment(std::vector<ColourList> lists);

  std::size_t size() const { return lists_.size(); }
  const ColourList& operator[](EdgeId e) const { return lists_[e]; }
  const std::vector<ColourList>& lists() const { return lists_; }
  bool contains(EdgeId e, Colour c) const;
  /// Smallest list size; 0 for an empty assignment.
  std::size_t min_size() const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<ColourList> lists_;
};

/// Λ(e) for every edge and Λ(v) for every vertex.
struct TotalListAssignment {
  ListAssignment edge_lists;
  std::vector<ColourList> vertex_lists;

  friend bool operator==(const TotalListAssignment&, const TotalListAssignment&) = default;
};

using VertexColouring = std::vector<Colour>;

class GreedyColouringStuck : public Error {
 public:
  explicit GreedyColouringStuck(VertexId v)
      : Error("greedy vertex colouring stuck at vertex " + std::to_string(v)), vertex_(v) {}
  VertexId vertex() const { return vertex_; }

 private:
  VertexId vertex_;
};

/// Throws InputError unless `lists` has exactly one list per edge of `g`.
void require_matching(const Graph& g, const ListAssignment& lists);
void require_matching(const Graph& g, const TotalListAssignment& lists);

/// Sorted, duplicate-free copy of a colour list; throws InputError on repeats.
ColourList normalize_list(ColourList list);
bool list_contains(const ColourList& list, Colour c);

/// Every edge receives {0, ..., k-1}.
ListAssignment uniform_lists(const Graph& g, std::size_t k);

/// Every edge receives a uniformly random k-subset of {0, ..., palette_size-1}.
ListAssignment random_lists(const Graph& g, std::size_t k, std::size_t palette_size,
                            std::uint64_t seed);

/// Random k-subsets of the palette for every vertex and every edge.
TotalListAssignment random_total_lists(const Graph& g, std::size_t k, std::size_t palette_size,
                                       std::uint64_t seed);

/// Same list {0, ..., k-1} on every vertex and edge.
TotalListAssignment uniform_total_lists(const Graph& g, std::size_t k);

/// Λ(e) minus the colours of the two end-vertices of e.
ListAssignment residual_edge_lists(const Graph& g, const TotalListAssignment& lists,
                                   const VertexColouring& vc);

/// Greedy in vertex-id order, lowest admissible colour first.
VertexColouring greedy_vertex_colouring(const Graph& g, std::span<const ColourList> vertex_lists);

}  // namespace lec
