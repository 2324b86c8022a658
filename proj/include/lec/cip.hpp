#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "lec/colouring.hpp"
#include "lec/errors.hpp"
#include "lec/graph.hpp"
#include "lec/list_assignment.hpp"

namespace lec {

/// A colour interchange path p_1 ... p_s with colours a_1 ... a_s.
///
/// Edge p_i p_{i+1} currently has colour a_i; interchanging recolours it a_{i+1}.
/// Afterwards a_1 is free at p_1 and a_{s-1} is free at p_s.
struct Cip {
  std::vector<VertexId> path;  // p_1 .. p_s
  std::vector<EdgeId> edges;   // p_i p_{i+1}, size s-1
  std::vector<Colour> colours; // a_1 .. a_s
  std::optional<VertexId> restricted_to;
  /// Path vertices at which a ban removed an otherwise admissible choice for
  /// the incoming recolour.
  std::vector<VertexId> restricted_vertices;

  std::size_t length() const { return path.size(); }

  friend bool operator==(const Cip&, const Cip&) = default;
};

/// Colour bans attached to vertices near the restriction vertex.
///
/// `incoming[x]` lists colours that may not be chosen as the new colour of the
/// path edge entering x. Banning the colour of edge xw keeps the path from
/// stepping from x to w.
///
/// `gained[x]` lists colours x may not acquire through the interchange, whether
/// as the path's end (incoming recolour) or as the recolour of the edge leaving
/// x. This is the fan condition that keeps t_h missing at leaf y_h.
struct ForbiddenChoice {
  std::map<VertexId, std::vector<Colour>> incoming;
  std::map<VertexId, std::vector<Colour>> gained;

  bool empty() const { return incoming.empty() && gained.empty(); }
  bool bans_incoming(VertexId x, Colour c) const;
  bool bans_gain(VertexId x, Colour c) const;
};

/// Receives search events; used for the `--trace` output.
class CipTracer {
 public:
  virtual ~CipTracer() = default;
  virtual void push(VertexId p, Colour a) = 0;
  virtual void pop() = 0;
  virtual void accept(const Cip& cip) = 0;
  virtual void fail(std::size_t nodes) = 0;
};

/// Writes `PUSH p a`, `POP`, `ACCEPT s=<len>` lines and a closing JSON object
/// with the accepted path and colours.
class TextCipTracer : public CipTracer {
 public:
  explicit TextCipTracer(std::ostream& out) : out_(out) {}
  void push(VertexId p, Colour a) override;
  void pop() override;
  void accept(const Cip& cip) override;
  void fail(std::size_t nodes) override;

 private:
  std::ostream& out_;
};

struct CipQuery {
  VertexId start;           // p_1
  EdgeId first_edge;        // p_1 p_2, must currently be coloured first_colour
  Colour first_colour;      // a_1
  std::optional<VertexId> restriction;  // w
  ForbiddenChoice forbidden;
  std::size_t node_limit = 2'000'000;
};

/// Raised when no CIP satisfies the query. With lists of size >= Δ+2 and no
/// bans this must never happen for a coloured start edge.
class NoCipFound : public Error {
 public:
  NoCipFound(std::size_t nodes, bool budget_exhausted)
      : Error(budget_exhausted ? "CIP search budget exhausted after " + std::to_string(nodes) + " nodes"
                               : "no CIP exists (" + std::to_string(nodes) + " search nodes)"),
        nodes_(nodes),
        budget_exhausted_(budget_exhausted) {}
  std::size_t nodes() const { return nodes_; }
  bool budget_exhausted() const { return budget_exhausted_; }

 private:
  std::size_t nodes_;
  bool budget_exhausted_;
};

struct CipSearchResult {
  std::optional<Cip> cip;
  std::size_t nodes = 0;
  bool budget_exhausted = false;
};

/// Depth-first search over next-colour choices, lowest colour first, with any
/// choice that ends the path immediately tried before those that extend it.
/// Exhaustive up to the node limit. Throws InputError on a malformed query.
CipSearchResult search_cip(const EdgeColouringState& state, const CipQuery& query,
                           CipTracer* tracer = nullptr);

/// As search_cip, but throws NoCipFound on failure.
Cip find_cip(const EdgeColouringState& state, const CipQuery& query, CipTracer* tracer = nullptr);
Cip find_cip(const Graph& g, const ListAssignment& lists, const PartialEdgeColouring& col,
             const CipQuery& query, CipTracer* tracer = nullptr);

struct CipViolation {
  std::string clause;
  std::size_t index = 0;  // 1-based path position where the clause failed, 0 if global
  std::string message;
};

/// nullopt when every CIP invariant holds against `col` (and `forbidden`, if given).
std::optional<CipViolation> validate_cip(const Graph& g, const ListAssignment& lists,
                                         const PartialEdgeColouring& col, const Cip& cip,
                                         const ForbiddenChoice* forbidden = nullptr);

/// Recolours p_i p_{i+1} with a_{i+1}. Throws InvariantError if the CIP does not
/// validate.
PartialEdgeColouring apply_interchange(const Graph& g, const ListAssignment& lists,
                                       const PartialEdgeColouring& col, const Cip& cip);
/// In-place variant on an indexed state; validates first.
void apply_interchange(EdgeColouringState& state, const Cip& cip);

/// The path read backwards; undoes `cip` once `cip` has been applied.
Cip reverse_cip(const Cip& cip);

/// Splits at 1-based position t (2 <= t <= s-1) into p_1..p_t and p_t..p_s.
/// Requires a_{t-1} != a_{t+1}; throws InputError otherwise.
std::pair<Cip, Cip> cut_cip(const Cip& cip, std::size_t t);

std::string cip_to_json(const Cip& cip);
/// DOT rendering with "before/after" edge labels.
std::string cip_to_dot(const Cip& cip, const std::string& name = "cip");

}  // namespace lec
