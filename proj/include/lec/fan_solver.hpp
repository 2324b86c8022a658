#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lec/cip.hpp"
#include "lec/colouring.hpp"
#include "lec/graph.hpp"
#include "lec/list_assignment.hpp"

namespace lec {

/// Vizing-type fan at centre v around the uncoloured edge f = v y_1.
///
/// Leaf y_h (h >= 2) is joined to v by an edge coloured t_{h-1}, and t_h is a
/// colour of L(v y_h) missing at y_h. Indices here are 0-based: leaves[0] = y_1,
/// edges[0] = f, colours[h] = t_{h+1}, and edges[h+1] carries colours[h].
class Fan {
 public:
  Fan(VertexId centre, EdgeId uncoloured, VertexId first_leaf);

  VertexId centre() const { return centre_; }
  EdgeId uncoloured() const { return edges_.front(); }
  std::size_t size() const { return leaves_.size(); }
  const std::vector<VertexId>& leaves() const { return leaves_; }
  const std::vector<EdgeId>& edges() const { return edges_; }
  const std::vector<Colour>& colours() const { return colours_; }

  std::optional<std::size_t> leaf_index(VertexId y) const;
  /// Index h with colours()[h] == c, i.e. the leaf whose edge carries c is h+1.
  std::optional<std::size_t> position_of_colour(Colour c) const;

  /// Appends leaf `y` reached by edge `e`, which carries `t` = t_i of the
  /// current last leaf. Throws InvariantError on a repeated leaf or colour.
  void push(VertexId y, EdgeId e, Colour t);
  /// Keeps the first m leaves.
  void truncate(std::size_t m);

  /// Checks condition (*) and distinctness against the live colouring.
  std::optional<std::string> check(const EdgeColouringState& state) const;

 private:
  VertexId centre_;
  std::vector<VertexId> leaves_;
  std::vector<EdgeId> edges_;
  std::vector<Colour> colours_;
};

/// Per-edge statistics of one insertion.
struct EdgeStats {
  EdgeId edge = 0;
  VertexId centre = 0;
  bool direct = false;            // coloured without any fan
  std::size_t fan_length = 0;     // largest number of leaves reached
  std::size_t rounds = 0;         // fan steps taken
  std::size_t cip_searches = 0;
  std::size_t interchanges = 0;   // CIPs applied (a partial interchange counts once)
  std::size_t cip_length_total = 0;
  std::size_t max_cip_length = 0;
  std::size_t centre_entries = 0; // interchanges along paths that met the centre
  std::size_t partial_interchanges = 0;
};

struct SolveReport {
  std::vector<EdgeStats> edges;

  std::size_t total_interchanges() const;
  std::size_t total_cip_searches() const;
  std::size_t max_fan_length() const;
  std::size_t max_cip_length() const;
  std::size_t direct_edges() const;
  std::size_t centre_entries() const;
};

struct SolveResult {
  std::vector<Colour> colouring;
  SolveReport report;
};

/// The construction got stuck. Under the |L(e)| >= Δ+2 precondition this is a
/// tripwire that must never fire.
class SolveFailure : public Error {
 public:
  SolveFailure(EdgeId edge, const std::string& reason, std::vector<std::string> trace)
      : Error("could not colour edge " + std::to_string(edge) + ": " + reason),
        edge_(edge),
        reason_(reason),
        trace_(std::move(trace)) {}
  EdgeId edge() const { return edge_; }
  const std::string& reason() const { return reason_; }
  const std::vector<std::string>& trace() const { return trace_; }

 private:
  EdgeId edge_;
  std::string reason_;
  std::vector<std::string> trace_;
};

/// One CIP search made while extending the colouring.
struct CipEvent {
  const EdgeColouringState& before;
  const CipQuery& query;
  const CipSearchResult& result;
  bool avoids_centre;  // the query also kept the path away from the fan centre
};

class SolverObserver {
 public:
  virtual ~SolverObserver() = default;
  virtual void on_cip_search(const CipEvent&) {}
  virtual void on_interchange(const Cip&) {}
};

struct SolverOptions {
  /// Waive the |L(e)| >= Δ+2 check (experiments with shorter lists).
  bool force = false;
  std::size_t cip_node_limit = 2'000'000;
  SolverObserver* observer = nullptr;
  CipTracer* tracer = nullptr;
  /// Mutation-test hook: corrupt the final colouring and skip the self-check.
  bool inject_fault = false;
};

/// Colours every edge, inserting edges in ascending id order.
/// Throws InputError when a list is shorter than Δ+2 (unless forced) and
/// SolveFailure when the construction gets stuck.
SolveResult colour_edges(const Graph& g, const ListAssignment& lists,
                         const SolverOptions& options = {});

/// Adds edge `f` to the proper partial colouring `col`.
PartialEdgeColouring extend_one_edge(const Graph& g, const ListAssignment& lists,
                                     const PartialEdgeColouring& col, EdgeId f,
                                     const SolverOptions& options = {},
                                     EdgeStats* stats = nullptr);

/// In-place insertion on an indexed state.
void extend_one_edge(EdgeColouringState& state, EdgeId f, const SolverOptions& options,
                     EdgeStats& stats);

/// Total colouring from {0, ..., palette_size-1}: greedy vertex colouring, then
/// the residual edge lists. palette_size must be at least Δ+4.
TotalColouring total_colour(const Graph& g, std::size_t palette_size,
                            const SolverOptions& options = {});

/// Total list colouring; every list must have at least Δ+4 colours.
TotalColouring total_colour_lists(const Graph& g, const TotalListAssignment& lists,
                                  const SolverOptions& options = {});

}  // namespace lec
