#include "lec/list_assignment.hpp"

#include <algorithm>
#include <numeric>

#include "lec/rng.hpp"

namespace lec {

ColourList normalize_list(ColourList list) {
  std::sort(list.begin(), list.end());
  if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
    throw InputError("colour list repeats a colour");
  }
  return list;
}

bool list_contains(const ColourList& list, Colour c) {
  return std::binary_search(list.begin(), list.end(), c);
}

ListAssignment::ListAssignment(std::vector<ColourList> lists) : lists_(std::move(lists)) {
  for (auto& l : lists_) l = normalize_list(std::move(l));
}

bool ListAssignment::contains(EdgeId e, Colour c) const { return list_contains(lists_[e], c); }

std::size_t ListAssignment::min_size() const {
  if (lists_.empty()) return 0;
  std::size_t m = lists_.front().size();
  for (const auto& l : lists_) m = std::min(m, l.size());
  return m;
}

void require_matching(const Graph& g, const ListAssignment& lists) {
  if (lists.size() != g.num_edges()) {
    throw InputError("list assignment has " + std::to_string(lists.size()) +
                     " edge lists but the graph has " + std::to_string(g.num_edges()) + " edges");
  }
}

void require_matching(const Graph& g, const TotalListAssignment& lists) {
  require_matching(g, lists.edge_lists);
  if (lists.vertex_lists.size() != g.num_vertices()) {
    throw InputError("total list assignment has " + std::to_string(lists.vertex_lists.size()) +
                     " vertex lists but the graph has " + std::to_string(g.num_vertices()) +
                     " vertices");
  }
}

ListAssignment uniform_lists(const Graph& g, std::size_t k) {
  ColourList all(k);
  std::iota(all.begin(), all.end(), Colour{0});
  return ListAssignment(std::vector<ColourList>(g.num_edges(), all));
}

namespace {

ColourList random_subset(Rng& rng, std::size_t k, std::size_t palette_size) {
  std::vector<Colour> pool(palette_size);
  std::iota(pool.begin(), pool.end(), Colour{0});
  for (std::size_t i = 0; i < k; ++i) {
    auto j = i + uniform_below(rng, palette_size - i);
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

void require_palette(std::size_t k, std::size_t palette_size) {
  if (palette_size < k) {
    throw InputError("palette of " + std::to_string(palette_size) +
                     " colours cannot supply lists of size " + std::to_string(k));
  }
}

}  // namespace

ListAssignment random_lists(const Graph& g, std::size_t k, std::size_t palette_size,
                            std::uint64_t seed) {
  require_palette(k, palette_size);
  Rng rng = substream(seed, "list-gen");
  std::vector<ColourList> lists;
  lists.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) lists.push_back(random_subset(rng, k, palette_size));
  return ListAssignment(std::move(lists));
}

TotalListAssignment random_total_lists(const Graph& g, std::size_t k, std::size_t palette_size,
                                       std::uint64_t seed) {
  require_palette(k, palette_size);
  TotalListAssignment out;
  out.edge_lists = random_lists(g, k, palette_size, seed);
  Rng rng = substream(seed, "vertex-list-gen");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out.vertex_lists.push_back(random_subset(rng, k, palette_size));
  }
  return out;
}

TotalListAssignment uniform_total_lists(const Graph& g, std::size_t k) {
  TotalListAssignment out;
  out.edge_lists = uniform_lists(g, k);
  ColourList all(k);
  std::iota(all.begin(), all.end(), Colour{0});
  out.vertex_lists.assign(g.num_vertices(), all);
  return out;
}

ListAssignment residual_edge_lists(const Graph& g, const TotalListAssignment& lists,
                                   const VertexColouring& vc) {
  require_matching(g, lists);
  if (vc.size() != g.num_vertices()) {
    throw InputError("vertex colouring does not cover every vertex");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!list_contains(lists.vertex_lists[v], vc[v])) {
      throw InputError("vertex " + std::to_string(v) + " is coloured outside its list");
    }
  }
  std::vector<ColourList> out;
  out.reserve(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edge(e);
    if (vc[u] == vc[v]) {
      throw InputError("vertex colouring is not proper on edge " + std::to_string(e));
    }
    ColourList l;
    for (Colour c : lists.edge_lists[e])
      if (c != vc[u] && c != vc[v]) l.push_back(c);
    out.push_back(std::move(l));
  }
  return ListAssignment(std::move(out));
}

VertexColouring greedy_vertex_colouring(const Graph& g, std::span<const ColourList> vertex_lists) {
  if (vertex_lists.size() != g.num_vertices()) {
    throw InputError("vertex lists do not cover every vertex");
  }
  constexpr Colour kNone = static_cast<Colour>(-1);
  VertexColouring col(g.num_vertices(), kNone);
  std::vector<Colour> taken;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    taken.clear();
    for (const auto& inc : g.incident(v))
      if (col[inc.neighbour] != kNone) taken.push_back(col[inc.neighbour]);
    std::sort(taken.begin(), taken.end());
    for (Colour c : vertex_lists[v]) {
      if (!std::binary_search(taken.begin(), taken.end(), c)) {
        col[v] = c;
        break;
      }
    }
    if (col[v] == kNone) throw GreedyColouringStuck(v);
  }
  // Re-verify unconditionally.
  for (const auto& e : g.edges()) {
    if (col[e.u] == col[e.v]) throw InvariantError("greedy vertex colouring produced a clash");
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (!list_contains(vertex_lists[v], col[v]))
      throw InvariantError("greedy vertex colouring left a list");
  }
  return col;
}

}  // namespace lec
