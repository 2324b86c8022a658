#include "lec/hall.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>

#include "lec/exact_oracle.hpp"

namespace lec {

namespace {

using Mask = std::uint32_t;

void guard_vertices(const Graph& g, std::size_t guard) {
  const std::size_t limit = std::min<std::size_t>(guard, 24);
  if (g.num_vertices() > limit) {
    throw GuardExceeded("graph has " + std::to_string(g.num_vertices()) +
                        " vertices, above the guard of " + std::to_string(limit));
  }
}

void guard_edges(const Graph& g, std::size_t guard) {
  const std::size_t limit = std::min<std::size_t>(guard, 26);
  if (g.num_edges() > limit) {
    throw GuardExceeded("graph has " + std::to_string(g.num_edges()) +
                        " edges, above the guard of " + std::to_string(limit));
  }
}

// Matching number of every edge subset, indexed by edge bitmask.
std::vector<std::uint8_t> matching_table(const Graph& g) {
  const std::size_t m = g.num_edges();
  std::vector<std::uint32_t> clash(m, 0);
  for (EdgeId e = 0; e < m; ++e)
    for (EdgeId f = 0; f < m; ++f)
      if (g.edge(e).has(g.edge(f).u) || g.edge(e).has(g.edge(f).v)) clash[e] |= std::uint32_t{1} << f;
  std::vector<std::uint8_t> nu(std::size_t{1} << m, 0);
  for (std::uint32_t h = 1; h < nu.size(); ++h) {
    const auto e = static_cast<EdgeId>(__builtin_ctz(h));
    nu[h] = std::max<std::uint8_t>(nu[h & (h - 1)], static_cast<std::uint8_t>(1 + nu[h & ~clash[e]]));
  }
  return nu;
}

void guard_elements(const Graph& g, std::size_t guard) {
  const std::size_t limit = std::min<std::size_t>(guard, 28);
  const std::size_t size = g.num_vertices() + g.num_edges();
  if (size > limit) {
    throw GuardExceeded("graph has " + std::to_string(size) +
                        " vertices and edges, above the guard of " + std::to_string(limit));
  }
}

// Closed neighbourhoods in the total graph. Bit v is vertex v, bit n+e is edge e.
std::vector<std::uint32_t> total_clash_masks(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const std::size_t size = n + g.num_edges();
  std::vector<std::uint32_t> clash(size, 0);
  for (std::size_t i = 0; i < size; ++i) clash[i] |= std::uint32_t{1} << i;
  auto link = [&](std::size_t i, std::size_t j) {
    clash[i] |= std::uint32_t{1} << j;
    clash[j] |= std::uint32_t{1} << i;
  };
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    link(ed.u, ed.v);
    link(ed.u, n + e);
    link(ed.v, n + e);
    for (EdgeId f = e + 1; f < g.num_edges(); ++f)
      if (ed.has(g.edge(f).u) || ed.has(g.edge(f).v)) link(n + e, n + f);
  }
  return clash;
}

// Total independence number of every set of elements, indexed as above.
std::vector<std::uint8_t> total_independence_table(const Graph& g) {
  const auto clash = total_clash_masks(g);
  std::vector<std::uint8_t> alpha(std::size_t{1} << clash.size(), 0);
  for (std::uint32_t x = 1; x < alpha.size(); ++x) {
    const auto i = static_cast<std::size_t>(__builtin_ctz(x));
    alpha[x] = std::max<std::uint8_t>(alpha[x & (x - 1)], static_cast<std::uint8_t>(1 + alpha[x & ~clash[i]]));
  }
  return alpha;
}

bool contains(Mask m, VertexId v) { return (m >> v) & 1u; }

std::vector<VertexId> vertices_of(Mask m) {
  std::vector<VertexId> out;
  for (VertexId v = 0; m; ++v, m >>= 1)
    if (m & 1u) out.push_back(v);
  return out;
}

std::vector<Mask> neighbour_masks(const Graph& g) {
  std::vector<Mask> nb(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) {
    nb[e.u] |= Mask{1} << e.v;
    nb[e.v] |= Mask{1} << e.u;
  }
  return nb;
}

bool connected(Mask m, const std::vector<Mask>& nb) {
  if (m == 0) return false;
  Mask seen = m & (~m + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (VertexId v : vertices_of(frontier)) next |= nb[v];
    next &= m & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == m;
}

std::vector<bool> edges_inside(const Graph& g, Mask m) {
  std::vector<bool> inside(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    inside[e] = contains(m, g.edge(e).u) && contains(m, g.edge(e).v);
  }
  return inside;
}

std::size_t ceil_div(std::size_t a, std::size_t b) { return (a + b - 1) / b; }

// Keeps the largest value, ties to the lexicographically smallest witness.
void offer(HallReport& best, std::size_t num, std::size_t den, Mask m,
           std::vector<EdgeId> edges = {}) {
  const std::size_t value = ceil_div(num, den);
  auto witness = vertices_of(m);
  if (value > best.value || (value == best.value && !best.witness.empty() &&
                             witness < best.witness) ||
      (value == best.value && best.witness.empty())) {
    best = HallReport{value, std::move(witness), std::move(edges), num, den};
  }
}

std::set<Colour> colours_of(const std::vector<ColourList>& lists) {
  std::set<Colour> out;
  for (const auto& l : lists) out.insert(l.begin(), l.end());
  return out;
}

}  // namespace

HallCheck check_hall_edge_condition(const Graph& g, const ListAssignment& lists,
                                    std::size_t guard) {
  require_matching(g, lists);
  guard_edges(g, guard);
  const std::size_t m = g.num_edges();
  const auto nu = matching_table(g);
  std::vector<std::uint32_t> carriers;
  for (Colour sigma : colours_of(lists.lists())) {
    std::uint32_t mask = 0;
    for (EdgeId e = 0; e < m; ++e)
      if (lists.contains(e, sigma)) mask |= std::uint32_t{1} << e;
    carriers.push_back(mask);
  }
  auto supply_of = [&](std::uint32_t h) {
    const auto demand = static_cast<std::size_t>(__builtin_popcount(h));
    std::size_t supply = 0;
    for (std::uint32_t c : carriers) {
      supply += nu[h & c];
      if (supply >= demand) break;
    }
    return supply;
  };
  // Induced subgraphs first, so a violation is reported on whole vertex sets
  // whenever one of them fails.
  std::vector<std::uint32_t> order;
  const Mask vertex_sets = g.num_vertices() <= 20 ? Mask{1} << g.num_vertices() : 1;
  for (Mask vs = 1; vs < vertex_sets; ++vs) {
    std::uint32_t h = 0;
    for (EdgeId e = 0; e < m; ++e)
      if (contains(vs, g.edge(e).u) && contains(vs, g.edge(e).v)) h |= std::uint32_t{1} << e;
    if (h != 0 && supply_of(h) < static_cast<std::size_t>(__builtin_popcount(h))) {
      order.push_back(h);
      break;
    }
  }
  for (std::uint32_t h = 1; order.empty() && h < (std::uint32_t{1} << m); ++h) {
    if (supply_of(h) < static_cast<std::size_t>(__builtin_popcount(h))) order.push_back(h);
  }
  for (std::uint32_t h : order) {
    const auto demand = static_cast<std::size_t>(__builtin_popcount(h));
    const std::size_t supply = supply_of(h);
    HallCheck out{false, {}, {}, demand, supply};
    Mask vs = 0;
    for (EdgeId e = 0; e < m; ++e) {
      if (!((h >> e) & 1u)) continue;
      out.witness_edges.push_back(e);
      vs |= (Mask{1} << g.edge(e).u) | (Mask{1} << g.edge(e).v);
    }
    out.witness = vertices_of(vs);
    return out;
  }
  return HallCheck{};
}

HallReport hall_condition_index(const Graph& g, std::size_t guard, bool connected_only) {
  guard_vertices(g, guard);
  const auto nb = neighbour_masks(g);
  HallReport best;
  const Mask full = (Mask{1} << g.num_vertices()) - 1;
  for (Mask m = 1; m <= full && m != 0; ++m) {
    if (connected_only && !connected(m, nb)) continue;
    const auto inside = edges_inside(g, m);
    const auto edges = static_cast<std::size_t>(std::count(inside.begin(), inside.end(), true));
    if (edges == 0) continue;
    offer(best, edges, matching_number(g, inside), m);
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.degree(v) == 0) continue;
    Mask m = Mask{1} << v;
    std::vector<EdgeId> star;
    for (const Incidence& inc : g.incident(v)) {
      m |= Mask{1} << inc.neighbour;
      star.push_back(inc.edge);
    }
    std::sort(star.begin(), star.end());
    const std::size_t size = star.size();
    offer(best, size, 1, m, std::move(star));
  }
  return best;
}

std::size_t hall_condition_index_via_lists(const Graph& g, std::size_t guard) {
  guard_edges(g, guard);
  for (std::size_t l = 0;; ++l) {
    if (check_hall_edge_condition(g, uniform_lists(g, l), guard).satisfied) return l;
  }
}

HallCheck check_hall_total_condition(const Graph& g, const TotalListAssignment& lists,
                                     std::size_t guard) {
  require_matching(g, lists);
  guard_elements(g, guard);
  const std::size_t n = g.num_vertices();
  const std::size_t m = g.num_edges();
  const auto alpha = total_independence_table(g);
  std::set<Colour> palette = colours_of(lists.edge_lists.lists());
  for (const auto& l : lists.vertex_lists) palette.insert(l.begin(), l.end());
  std::vector<std::uint32_t> carriers;
  for (Colour sigma : palette) {
    std::uint32_t mask = 0;
    for (VertexId v = 0; v < n; ++v)
      if (list_contains(lists.vertex_lists[v], sigma)) mask |= std::uint32_t{1} << v;
    for (EdgeId e = 0; e < m; ++e)
      if (lists.edge_lists.contains(e, sigma)) mask |= std::uint32_t{1} << (n + e);
    carriers.push_back(mask);
  }
  auto violated = [&](std::uint32_t x) {
    const auto demand = static_cast<std::size_t>(__builtin_popcount(x));
    std::size_t supply = 0;
    for (std::uint32_t c : carriers) {
      supply += alpha[x & c];
      if (supply >= demand) return false;
    }
    return true;
  };
  // Vertex-induced subgraphs first, then every set of vertices and edges.
  std::optional<std::uint32_t> found;
  for (Mask vs = 1; vs < (Mask{1} << n) && !found; ++vs) {
    std::uint32_t x = vs;
    for (EdgeId e = 0; e < m; ++e)
      if (contains(vs, g.edge(e).u) && contains(vs, g.edge(e).v)) x |= std::uint32_t{1} << (n + e);
    if (violated(x)) found = x;
  }
  for (std::uint32_t x = 1; !found && x < (std::uint32_t{1} << (n + m)); ++x)
    if (violated(x)) found = x;
  if (!found) return HallCheck{};
  HallCheck out;
  out.satisfied = false;
  out.demand = static_cast<std::size_t>(__builtin_popcount(*found));
  for (std::uint32_t c : carriers) out.supply += alpha[*found & c];
  out.witness = vertices_of(*found & ((Mask{1} << n) - 1));
  for (EdgeId e = 0; e < m; ++e)
    if ((*found >> (n + e)) & 1u) out.witness_edges.push_back(e);
  return out;
}

HallReport total_hall_condition_number(const Graph& g, std::size_t guard, bool connected_only) {
  guard_elements(g, guard);
  const std::size_t n = g.num_vertices();
  const std::size_t size = n + g.num_edges();
  const auto alpha = total_independence_table(g);
  const auto clash = total_clash_masks(g);
  auto connected_set = [&](std::uint32_t x) {
    std::uint32_t seen = x & (~x + 1);
    std::uint32_t frontier = seen;
    while (frontier) {
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f; f &= f - 1) next |= clash[__builtin_ctz(f)];
      next &= x & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == x;
  };
  HallReport best;
  std::uint32_t best_set = 0;
  for (std::uint32_t x = 1; x < (std::uint32_t{1} << size); ++x) {
    const auto num = static_cast<std::size_t>(__builtin_popcount(x));
    const std::size_t value = ceil_div(num, alpha[x]);
    if (value <= best.value) continue;
    if (connected_only && !connected_set(x)) continue;
    best.value = value;
    best.numerator = num;
    best.denominator = alpha[x];
    best_set = x;
  }
  best.witness = vertices_of(best_set & ((Mask{1} << n) - 1));
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    if ((best_set >> (n + e)) & 1u) best.witness_edges.push_back(e);
  return best;
}

std::size_t total_hall_condition_number_via_lists(const Graph& g, std::size_t guard) {
  guard_elements(g, guard);
  for (std::size_t l = 0;; ++l) {
    if (check_hall_total_condition(g, uniform_total_lists(g, l), guard).satisfied) return l;
  }
}

}  // namespace lec
