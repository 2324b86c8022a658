#include "lec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_set>

#include "lec/errors.hpp"
#include "lec/rng.hpp"

namespace lec {

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : edges_(std::move(edges)), incidence_(n) {
  pair_index_.reserve(edges_.size() * 2);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const auto [u, v] = edges_[e];
    if (u >= n || v >= n) {
      throw InputError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (u == v) throw InputError("edge " + std::to_string(e) + " is a loop");
    if (!pair_index_.emplace(key(u, v), e).second) {
      throw InputError("edge " + std::to_string(e) + " duplicates an earlier edge");
    }
    incidence_[u].push_back({e, v});
    incidence_[v].push_back({e, u});
  }
}

std::uint64_t Graph::key(VertexId a, VertexId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  auto it = pair_index_.find(key(a, b));
  if (it == pair_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t max_degree(const Graph& g) {
  std::size_t d = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) d = std::max(d, g.degree(v));
  return d;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const VertexId> vs) {
  InducedSubgraph out;
  out.vertex_map.assign(vs.begin(), vs.end());
  std::sort(out.vertex_map.begin(), out.vertex_map.end());
  out.vertex_map.erase(std::unique(out.vertex_map.begin(), out.vertex_map.end()),
                       out.vertex_map.end());
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> relabel(g.num_vertices(), kAbsent);
  for (VertexId i = 0; i < out.vertex_map.size(); ++i) {
    if (out.vertex_map[i] >= g.num_vertices()) {
      throw InputError("vertex " + std::to_string(out.vertex_map[i]) + " out of range");
    }
    relabel[out.vertex_map[i]] = i;
  }
  std::vector<Edge> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (relabel[u] != kAbsent && relabel[v] != kAbsent) {
      edges.push_back({relabel[u], relabel[v]});
      out.edge_map.push_back(e);
    }
  }
  out.graph = Graph(out.vertex_map.size(), std::move(edges));
  return out;
}

Graph path_graph(std::size_t k) {
  if (k == 0) throw InputError("path needs at least one vertex");
  std::vector<Edge> edges;
  for (VertexId i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
  return Graph(k, std::move(edges));
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw InputError("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < k; ++i) edges.push_back({i, static_cast<VertexId>((i + 1) % k)});
  return Graph(k, std::move(edges));
}

Graph complete_graph(std::size_t k) {
  if (k == 0) throw InputError("complete graph needs at least one vertex");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < k; ++i)
    for (VertexId j = i + 1; j < k; ++j) edges.push_back({i, j});
  return Graph(k, std::move(edges));
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw InputError("complete bipartite graph needs both sides non-empty");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < a; ++i)
    for (VertexId j = 0; j < b; ++j) edges.push_back({i, static_cast<VertexId>(a + j)});
  return Graph(a + b, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.push_back({i, static_cast<VertexId>((i + 1) % 5)});       // outer cycle
    edges.push_back({i, i + 5});                                    // spokes
    edges.push_back({i + 5, static_cast<VertexId>(5 + (i + 2) % 5)});  // pentagram
  }
  return Graph(10, std::move(edges));
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError("edge probability must lie in [0, 1]");
  Rng rng = substream(seed, "graph-gen");
  std::vector<Edge> edges;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j)
      if (uniform_unit(rng) < p) edges.push_back({i, j});
  return Graph(n, std::move(edges));
}

Graph generate(const GraphKind& kind) {
  struct Visitor {
    Graph operator()(const gen::Path& k) const { return path_graph(k.k); }
    Graph operator()(const gen::Cycle& k) const { return cycle_graph(k.k); }
    Graph operator()(const gen::Complete& k) const { return complete_graph(k.k); }
    Graph operator()(const gen::CompleteBipartite& k) const {
      return complete_bipartite_graph(k.a, k.b);
    }
    Graph operator()(const gen::Petersen&) const { return petersen_graph(); }
    Graph operator()(const gen::Random& k) const { return random_graph(k.n, k.p, k.seed); }
  };
  return std::visit(Visitor{}, kind);
}

namespace {

bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

// Splits on single spaces; rejects anything but exactly two tokens.
bool split_pair(std::string_view line, std::uint64_t& a, std::uint64_t& b) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  auto sp = line.find(' ');
  if (sp == std::string_view::npos) return false;
  return parse_uint(line.substr(0, sp), a) && parse_uint(line.substr(sp + 1), b);
}

}  // namespace

Graph parse_graph(std::string_view text) {
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0, m = 0;
  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> seen;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (line.empty() || line == "\r" || line.front() == '#') continue;
    std::uint64_t a, b;
    if (!split_pair(line, a, b)) {
      throw ParseError(line_no, "expected two non-negative integers separated by a space");
    }
    if (!have_header) {
      if (a > UINT32_MAX) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than the header declares");
    if (a >= n || b >= n) throw ParseError(line_no, "endpoint out of range");
    if (a == b) throw ParseError(line_no, "loop edge");
    if (!seen.insert(a < b ? (a << 32) | b : (b << 32) | a).second) {
      throw ParseError(line_no, "duplicate edge");
    }
    edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b)});
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError(line_no, "header declares " + std::to_string(m) + " edges but " +
                                  std::to_string(edges.size()) + " were given");
  }
  return Graph(n, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace lec
