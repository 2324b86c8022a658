#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace lec {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  VertexId u;
  VertexId v;

  VertexId other(VertexId x) const { return x == u ? v : u; }
  bool has(VertexId x) const { return x == u || x == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// One entry of a vertex's incidence list.
struct Incidence {
  EdgeId edge;
  VertexId neighbour;
};

/// Immutable simple graph on vertices 0..n-1. Edge ids are positions in the
/// edge list given at construction.
class Graph {
 public:
  Graph() = default;
  /// Throws InputError on loops, parallel edges or out-of-range endpoints.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return incidence_.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return incidence_[v]; }
  std::size_t degree(VertexId v) const { return incidence_[v].size(); }

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices() == b.num_vertices() && a.edges_ == b.edges_;
  }

 private:
  static std::uint64_t key(VertexId a, VertexId b);

  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> incidence_;
  std::unordered_map<std::uint64_t, EdgeId> pair_index_;
};

/// Maximum vertex degree; 0 for edgeless graphs.
std::size_t max_degree(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<VertexId> vertex_map;  // new vertex id -> original vertex id
  std::vector<EdgeId> edge_map;      // new edge id -> original edge id
};

/// Subgraph induced by `vs`. New vertex ids follow ascending original id;
/// edges keep their relative order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vs);

namespace gen {
struct Path { std::size_t k; };
struct Cycle { std::size_t k; };
struct Complete { std::size_t k; };
struct CompleteBipartite { std::size_t a, b; };
struct Petersen {};
struct Random { std::size_t n; double p; std::uint64_t seed; };
}  // namespace gen

using GraphKind = std::variant<gen::Path, gen::Cycle, gen::Complete,
                               gen::CompleteBipartite, gen::Petersen, gen::Random>;

/// Deterministic generator for the test corpus. Throws InputError on bad
/// parameters.
Graph generate(const GraphKind& kind);

Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t k);
Graph complete_graph(std::size_t k);
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph petersen_graph();
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

/// Edge-list text format: "n m" header, then m lines "u v". Lines starting
/// with '#' and blank lines are ignored. Throws ParseError naming the line.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace lec
