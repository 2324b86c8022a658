#include "lec/exact_oracle.hpp"

#include <algorithm>
#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>
#include <functional>
#include <unordered_map>

#include "lec/colouring.hpp"

namespace lec {

namespace {

using Clock = std::chrono::steady_clock;

class Budget {
 public:
  explicit Budget(const OracleBudget& b)
      : limit_(b.node_limit),
        deadline_(b.timeout ? std::optional(Clock::now() + *b.timeout) : std::nullopt) {}

  // False once the node limit or the deadline is reached.
  bool tick() {
    ++nodes_;
    if (nodes_ > limit_) return false;
    if (deadline_ && (nodes_ & 0xfff) == 0 && Clock::now() > *deadline_) return false;
    return true;
  }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::uint64_t limit_;
  std::optional<Clock::time_point> deadline_;
  std::uint64_t nodes_ = 0;
};

// Backtracking list edge colouring over palette indices.
class ListSearch {
 public:
  ListSearch(const Graph& g, const ListAssignment& lists, const OracleBudget& budget)
      : g_(g), budget_(budget) {
    for (const auto& l : lists.lists()) palette_.insert(palette_.end(), l.begin(), l.end());
    std::sort(palette_.begin(), palette_.end());
    palette_.erase(std::unique(palette_.begin(), palette_.end()), palette_.end());
    const std::size_t p = palette_.size();
    in_list_.assign(g.num_edges() * p, false);
    lists_.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (Colour c : lists[e]) {
        const auto i = static_cast<std::uint32_t>(
            std::lower_bound(palette_.begin(), palette_.end(), c) - palette_.begin());
        in_list_[e * p + i] = true;
        lists_[e].push_back(i);
      }
    }
    symmetric_ = std::all_of(lists.lists().begin(), lists.lists().end(),
                             [&](const ColourList& l) { return l == lists.lists().front(); });
    used_.assign(g.num_vertices() * p, false);
    avail_.resize(g.num_edges());
    for (EdgeId e = 0; e < g.num_edges(); ++e) avail_[e] = lists_[e].size();
    col_.assign(g.num_edges(), kNone);
  }

  ColourabilityResult run() {
    ColourabilityResult r;
    bool ok = true;
    for (EdgeId e = 0; e < g_.num_edges(); ++e)
      if (avail_[e] == 0) ok = false;
    const bool found = ok && solve(0, 0);
    r.nodes = budget_.nodes();
    if (exhausted_) {
      r.verdict = Verdict::budget_exceeded;
    } else if (found) {
      r.verdict = Verdict::yes;
      std::vector<Colour> w(g_.num_edges());
      for (EdgeId e = 0; e < g_.num_edges(); ++e) w[e] = palette_[col_[e]];
      r.witness = std::move(w);
    } else {
      r.verdict = Verdict::no;
    }
    return r;
  }

 private:
  static constexpr std::uint32_t kNone = ~0u;

  bool used(VertexId v, std::uint32_t c) const { return used_[v * palette_.size() + c]; }

  // Marks colour c at the endpoints of e and updates the counts of the
  // uncoloured edges around them. Returns false when some count hits zero.
  bool place(EdgeId e, std::uint32_t c) {
    const auto [u, v] = g_.edge(e);
    bool ok = true;
    for (VertexId x : {u, v}) {
      for (const auto& inc : g_.incident(x)) {
        const EdgeId f = inc.edge;
        if (f == e || col_[f] != kNone) continue;
        if (in_list_[f * palette_.size() + c] && !used(inc.neighbour, c)) {
          if (--avail_[f] == 0) ok = false;
        }
      }
    }
    used_[u * palette_.size() + c] = true;
    used_[v * palette_.size() + c] = true;
    col_[e] = c;
    return ok;
  }

  void unplace(EdgeId e, std::uint32_t c) {
    const auto [u, v] = g_.edge(e);
    col_[e] = kNone;
    used_[u * palette_.size() + c] = false;
    used_[v * palette_.size() + c] = false;
    for (VertexId x : {u, v}) {
      for (const auto& inc : g_.incident(x)) {
        const EdgeId f = inc.edge;
        if (f == e || col_[f] != kNone) continue;
        if (in_list_[f * palette_.size() + c] && !used(inc.neighbour, c)) ++avail_[f];
      }
    }
  }

  // `fresh` is one past the largest palette index used so far; with identical
  // lists the colours are interchangeable, so a new colour is tried only once.
  bool solve(EdgeId e, std::uint32_t fresh) {
    if (e == g_.num_edges()) return true;
    const auto [u, v] = g_.edge(e);
    for (std::uint32_t c : lists_[e]) {
      if (symmetric_ && c > fresh) break;
      if (used(u, c) || used(v, c)) continue;
      if (!budget_.tick()) {
        exhausted_ = true;
        return false;
      }
      const bool ok = place(e, c);
      if (ok && solve(e + 1, std::max(fresh, c + 1))) return true;
      unplace(e, c);
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  Budget budget_;
  std::vector<Colour> palette_;
  std::vector<std::vector<std::uint32_t>> lists_;
  std::vector<bool> in_list_;
  std::vector<bool> used_;
  std::vector<std::size_t> avail_;
  std::vector<std::uint32_t> col_;
  bool symmetric_ = false;
  bool exhausted_ = false;
};

// Colours {0..k-1}, at most two edges of a colour per vertex.
class Improper2Search {
 public:
  Improper2Search(const Graph& g, std::size_t k, const OracleBudget& budget)
      : g_(g), k_(k), budget_(budget), count_(g.num_vertices() * k, 0) {}

  Verdict run() {
    if (solve(0, 0)) return Verdict::yes;
    return exhausted_ ? Verdict::budget_exceeded : Verdict::no;
  }

 private:
  bool solve(EdgeId e, std::size_t fresh) {
    if (e == g_.num_edges()) return true;
    const auto [u, v] = g_.edge(e);
    for (std::size_t c = 0; c < k_ && c <= fresh; ++c) {
      auto& cu = count_[u * k_ + c];
      auto& cv = count_[v * k_ + c];
      if (cu >= 2 || cv >= 2) continue;
      if (!budget_.tick()) {
        exhausted_ = true;
        return false;
      }
      ++cu;
      ++cv;
      if (solve(e + 1, std::max(fresh, c + 1))) return true;
      --cu;
      --cv;
      if (exhausted_) return false;
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  Budget budget_;
  std::vector<std::uint8_t> count_;
  bool exhausted_ = false;
};

void guard_edges(const Graph& g, std::size_t guard) {
  if (g.num_edges() > guard) {
    throw GuardExceeded("graph has " + std::to_string(g.num_edges()) +
                        " edges, above the guard of " + std::to_string(guard));
  }
}

using Adjacency = std::vector<std::vector<VertexId>>;

Adjacency allowed_adjacency(const Graph& g, const std::vector<bool>& edge_allowed) {
  Adjacency adj(g.num_vertices());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!edge_allowed[e]) continue;
    const auto [u, v] = g.edge(e);
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

std::optional<std::vector<int>> two_colouring(const Adjacency& adj) {
  std::vector<int> side(adj.size(), -1);
  for (VertexId s = 0; s < adj.size(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::vector<VertexId> stack{s};
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId y : adj[x]) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          stack.push_back(y);
        } else if (side[y] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::size_t bipartite_matching(const Adjacency& adj, const std::vector<int>& side) {
  const std::size_t n = adj.size();
  std::vector<std::int64_t> mate(n, -1);
  std::vector<char> seen;
  std::function<bool(VertexId)> augment = [&](VertexId x) {
    for (VertexId y : adj[x]) {
      if (seen[y]) continue;
      seen[y] = 1;
      if (mate[y] == -1 || augment(static_cast<VertexId>(mate[y]))) {
        mate[y] = x;
        mate[x] = y;
        return true;
      }
    }
    return false;
  };
  std::size_t size = 0;
  for (VertexId x = 0; x < n; ++x) {
    if (side[x] != 0 || mate[x] != -1) continue;
    seen.assign(n, 0);
    if (augment(x)) ++size;
  }
  return size;
}

std::size_t small_matching(const Adjacency& adj) {
  const std::size_t n = adj.size();
  std::unordered_map<std::uint32_t, std::size_t> memo;
  std::function<std::size_t(std::uint32_t)> best = [&](std::uint32_t used) -> std::size_t {
    VertexId x = 0;
    while (x < n && ((used >> x) & 1u)) ++x;
    if (x >= n) return 0;
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    const std::uint32_t without = used | (1u << x);
    std::size_t r = best(without);
    for (VertexId y : adj[x]) {
      if ((used >> y) & 1u) continue;
      r = std::max(r, 1 + best(without | (1u << y)));
    }
    memo.emplace(used, r);
    return r;
  };
  return best(0);
}

std::size_t edmonds_matching(const Adjacency& adj) {
  using BGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  BGraph bg(adj.size());
  for (VertexId x = 0; x < adj.size(); ++x)
    for (VertexId y : adj[x])
      if (x < y) boost::add_edge(x, y, bg);
  std::vector<boost::graph_traits<BGraph>::vertex_descriptor> mate(adj.size());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  return boost::matching_size(bg, &mate[0]);
}

}  // namespace

ColourabilityResult list_edge_colourable(const Graph& g, const ListAssignment& lists,
                                         const OracleBudget& budget) {
  require_matching(g, lists);
  ColourabilityResult r = ListSearch(g, lists, budget).run();
  if (r.witness) {
    if (auto bad = check_edge_colouring(g, lists, *r.witness)) {
      throw InvariantError("oracle witness failed the checker: " + bad->message);
    }
  }
  return r;
}

std::size_t chromatic_index(const Graph& g, const OracleBudget& budget, std::size_t edge_guard) {
  guard_edges(g, edge_guard);
  if (g.num_edges() == 0) return 0;
  const std::size_t delta = max_degree(g);
  for (std::size_t k : {delta, delta + 1}) {
    const auto r = list_edge_colourable(g, uniform_lists(g, k), budget);
    if (r.verdict == Verdict::budget_exceeded) throw BudgetExceeded("chromatic index search");
    if (r.verdict == Verdict::yes) return k;
  }
  throw InvariantError("no edge colouring with Δ+1 colours found");
}

std::size_t improper2_chromatic_index(const Graph& g, const OracleBudget& budget,
                                      std::size_t edge_guard) {
  guard_edges(g, edge_guard);
  if (g.num_edges() == 0) return 0;
  for (std::size_t k = 1;; ++k) {
    const Verdict v = Improper2Search(g, k, budget).run();
    if (v == Verdict::budget_exceeded) throw BudgetExceeded("2-improper chromatic index search");
    if (v == Verdict::yes) return k;
  }
}

std::size_t matching_number(const Graph& g) {
  return matching_number(g, std::vector<bool>(g.num_edges(), true));
}

std::size_t matching_number(const Graph& g, const std::vector<bool>& edge_allowed) {
  if (edge_allowed.size() != g.num_edges()) throw InputError("edge mask size mismatch");
  const Adjacency adj = allowed_adjacency(g, edge_allowed);
  if (auto side = two_colouring(adj)) return bipartite_matching(adj, *side);
  if (adj.size() <= 20) return small_matching(adj);
  return edmonds_matching(adj);
}

std::size_t total_independence_number(const Graph& g, std::size_t vertex_guard) {
  return total_independence_number(g, std::vector<bool>(g.num_vertices(), true),
                                   std::vector<bool>(g.num_edges(), true), vertex_guard);
}

std::size_t total_independence_number(const Graph& g, const std::vector<bool>& vertex_allowed,
                                      const std::vector<bool>& edge_allowed,
                                      std::size_t vertex_guard) {
  const std::size_t n = g.num_vertices();
  if (n > vertex_guard || n > 30) {
    throw GuardExceeded("graph has " + std::to_string(n) + " vertices, above the guard of " +
                        std::to_string(std::min<std::size_t>(vertex_guard, 30)));
  }
  if (vertex_allowed.size() != n || edge_allowed.size() != g.num_edges()) {
    throw InputError("element mask size mismatch");
  }
  // Vertices are decided in id order. A vertex is taken into the set, matched
  // to a later vertex by an allowed edge, or skipped. `matched` marks later
  // vertices covered by a chosen edge; `blocked` marks later vertices with a
  // chosen neighbour.
  std::vector<std::uint64_t> later_nbrs(n, 0);
  std::vector<std::vector<VertexId>> later_partners(n);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    if (u > v) std::swap(u, v);
    later_nbrs[u] |= std::uint64_t{1} << v;
    if (edge_allowed[e]) later_partners[u].push_back(v);
  }
  std::unordered_map<std::uint64_t, std::size_t> memo;
  std::function<std::size_t(VertexId, std::uint32_t, std::uint32_t)> best =
      [&](VertexId x, std::uint32_t matched, std::uint32_t blocked) -> std::size_t {
    if (x == n) return 0;
    const std::uint64_t key = (std::uint64_t{x} << 60) ^
                              (std::uint64_t{matched} << 30) ^ std::uint64_t{blocked};
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const std::uint32_t bit = 1u << x;
    const std::uint32_t rest_m = matched & ~bit;
    const std::uint32_t rest_b = blocked & ~bit;
    std::size_t r = best(x + 1, rest_m, rest_b);
    if (!(matched & bit)) {
      if (vertex_allowed[x] && !(blocked & bit)) {
        r = std::max(r, 1 + best(x + 1, rest_m,
                                 rest_b | static_cast<std::uint32_t>(later_nbrs[x])));
      }
      for (VertexId y : later_partners[x]) {
        if (matched & (1u << y)) continue;
        r = std::max(r, 1 + best(x + 1, rest_m | (1u << y), rest_b));
      }
    }
    memo.emplace(key, r);
    return r;
  };
  return best(0, 0, 0);
}

}  // namespace lec
