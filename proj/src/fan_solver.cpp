#include "lec/fan_solver.hpp"

#include <algorithm>
#include <sstream>

namespace lec {

Fan::Fan(VertexId centre, EdgeId uncoloured, VertexId first_leaf)
    : centre_(centre), leaves_{first_leaf}, edges_{uncoloured} {}

std::optional<std::size_t> Fan::leaf_index(VertexId y) const {
  auto it = std::find(leaves_.begin(), leaves_.end(), y);
  if (it == leaves_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - leaves_.begin());
}

std::optional<std::size_t> Fan::position_of_colour(Colour c) const {
  auto it = std::find(colours_.begin(), colours_.end(), c);
  if (it == colours_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - colours_.begin());
}

void Fan::push(VertexId y, EdgeId e, Colour t) {
  if (leaf_index(y)) throw InvariantError("fan leaf " + std::to_string(y) + " repeated");
  if (position_of_colour(t)) throw InvariantError("fan colour " + std::to_string(t) + " repeated");
  leaves_.push_back(y);
  edges_.push_back(e);
  colours_.push_back(t);
}

void Fan::truncate(std::size_t m) {
  leaves_.resize(m);
  edges_.resize(m);
  colours_.resize(m - 1);
}

std::optional<std::string> Fan::check(const EdgeColouringState& state) const {
  const Graph& g = state.graph();
  const ListAssignment& lists = state.lists();
  if (state.colour(edges_.front())) return "the fan edge f is coloured";
  for (std::size_t h = 0; h < leaves_.size(); ++h) {
    if (g.edge(edges_[h]).other(centre_) != leaves_[h] || !g.edge(edges_[h]).has(centre_)) {
      return "fan edge " + std::to_string(h + 1) + " does not join the centre to its leaf";
    }
    for (std::size_t j = 0; j < h; ++j)
      if (leaves_[j] == leaves_[h]) return "fan leaves repeat";
  }
  for (std::size_t h = 0; h < colours_.size(); ++h) {
    const Colour t = colours_[h];
    for (std::size_t j = 0; j < h; ++j)
      if (colours_[j] == t) return "fan colours repeat";
    if (state.colour(edges_[h + 1]) != t) {
      return "edge to y_" + std::to_string(h + 2) + " is not coloured t_" + std::to_string(h + 1);
    }
    if (!lists.contains(edges_[h], t)) {
      return "t_" + std::to_string(h + 1) + " is not in L(v y_" + std::to_string(h + 1) + ")";
    }
    if (!state.missing(leaves_[h], t)) {
      return "t_" + std::to_string(h + 1) + " is present at y_" + std::to_string(h + 1);
    }
  }
  return std::nullopt;
}

std::size_t SolveReport::total_interchanges() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.interchanges;
  return n;
}
std::size_t SolveReport::total_cip_searches() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.cip_searches;
  return n;
}
std::size_t SolveReport::max_fan_length() const {
  std::size_t n = 0;
  for (const auto& e : edges) n = std::max(n, e.fan_length);
  return n;
}
std::size_t SolveReport::max_cip_length() const {
  std::size_t n = 0;
  for (const auto& e : edges) n = std::max(n, e.max_cip_length);
  return n;
}
std::size_t SolveReport::direct_edges() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.direct ? 1 : 0;
  return n;
}
std::size_t SolveReport::centre_entries() const {
  std::size_t n = 0;
  for (const auto& e : edges) n += e.centre_entries;
  return n;
}

namespace {

std::string str(std::size_t x) { return std::to_string(x); }

class Extender {
 public:
  Extender(EdgeColouringState& state, const SolverOptions& options, EdgeStats& stats)
      : state_(state), graph_(state.graph()), lists_(state.lists()), options_(options),
        stats_(stats) {}

  void run(EdgeId f) {
    if (state_.colour(f)) throw InputError("edge " + str(f) + " is already coloured");
    f_ = f;
    const auto [a, b] = graph_.edge(f);
    const std::size_t da = state_.coloured_degree(a);
    const std::size_t db = state_.coloured_degree(b);
    const VertexId centre = da == db ? std::min(a, b) : (da > db ? a : b);
    Fan fan(centre, f, graph_.edge(f).other(centre));
    stats_.edge = f;
    stats_.centre = centre;
    log("extend edge " + str(f) + " centre " + str(centre) + " leaf " + str(fan.leaves()[0]));

    const std::size_t max_rounds = 64 + 8 * (graph_.degree(centre) + 2);
    for (std::size_t round = 0;; ++round) {
      if (round > max_rounds) fail("fan did not settle within " + str(max_rounds) + " rounds");
      stats_.rounds = round + 1;
      stats_.fan_length = std::max(stats_.fan_length, fan.size());
      assert_fan(fan);
      if (step(fan)) return;
    }
  }

  std::vector<std::string> take_log() { return std::move(log_); }

 private:
  enum class Outcome { done, again };

  // One fan step at the last leaf. Returns true once f is coloured.
  bool step(Fan& fan) {
    const VertexId v = fan.centre();
    const VertexId y = fan.leaves().back();
    const EdgeId e = fan.edges().back();
    std::vector<Colour> candidates;
    for (Colour c : lists_[e])
      if (state_.missing(y, c)) candidates.push_back(c);
    if (candidates.empty()) fail("no colour of L(v y_i) is missing at y_i");

    for (Colour c : candidates) {
      if (state_.missing(v, c)) {
        stats_.direct = fan.size() == 1 && stats_.interchanges == 0;
        rotate(fan, c);
        return true;
      }
    }
    for (Colour c : candidates) {
      const EdgeId owner = *state_.edge_with(v, c);
      const VertexId z = graph_.edge(owner).other(v);
      if (!fan.leaf_index(z)) {
        log("fan push y=" + str(z) + " t=" + str(c));
        fan.push(z, owner, c);
        return false;
      }
    }
    // Every candidate t_i is already a fan colour.
    return resolve_collision(fan) == Outcome::done;
  }

  // Recolours v y_h with t_h (h >= 2) and f with t_1, where t_i = last.
  void rotate(Fan& fan, Colour last) {
    std::vector<Colour> target = fan.colours();
    target.push_back(last);
    log("rotate i=" + str(fan.size()) + " t_i=" + str(last));
    const auto& edges = fan.edges();
    for (std::size_t h = 1; h < edges.size(); ++h) state_.clear(edges[h]);
    for (std::size_t h = 0; h < edges.size(); ++h) state_.assign(edges[h], target[h]);
  }

  ForbiddenChoice leaf_bans(const Fan& fan) const {
    // Condition (X): leaf y_h must not acquire t_h.
    ForbiddenChoice bans;
    for (std::size_t h = 0; h < fan.colours().size(); ++h) {
      bans.gained[fan.leaves()[h]].push_back(fan.colours()[h]);
    }
    return bans;
  }

  CipSearchResult search(const CipQuery& query, bool avoids_centre) {
    ++stats_.cip_searches;
    auto result = search_cip(state_, query, options_.tracer);
    if (options_.observer) {
      options_.observer->on_cip_search(CipEvent{state_, query, result, avoids_centre});
    }
    return result;
  }

  void apply(const Cip& cip) {
    apply_interchange(state_, cip);
    ++stats_.interchanges;
    stats_.cip_length_total += cip.length();
    stats_.max_cip_length = std::max(stats_.max_cip_length, cip.length());
    log("interchange " + cip_to_json(cip));
    if (options_.observer) options_.observer->on_interchange(cip);
  }

  Outcome resolve_collision(Fan& fan) {
    const VertexId v = fan.centre();
    const VertexId y = fan.leaves().back();
    const EdgeId e = fan.edges().back();
    std::vector<Colour> starts;
    for (Colour c : lists_[e])
      if (state_.missing(v, c)) starts.push_back(c);
    if (starts.empty()) fail("no colour of L(v y_i) is missing at v");

    const ForbiddenChoice x_bans = leaf_bans(fan);
    ForbiddenChoice avoid = x_bans;
    for (const auto& inc : graph_.incident(v)) {
      if (auto c = state_.colour(inc.edge)) avoid.incoming[inc.neighbour].push_back(*c);
    }

    // First try paths that never reach v: (*) survives and a_1 stays missing at v.
    for (Colour a1 : starts) {
      CipQuery query{y, *state_.edge_with(y, a1), a1, v, avoid, options_.cip_node_limit};
      auto r = search(query, true);
      if (!r.cip) continue;
      apply(*r.cip);
      assert_fan(fan);
      if (!state_.missing(v, a1) || !state_.missing(y, a1)) {
        throw InvariantError("a_1 not freed by a centre-avoiding interchange");
      }
      rotate(fan, a1);
      return Outcome::done;
    }

    // Otherwise let the path meet v and handle the endpoint and internal cases.
    for (Colour a1 : starts) {
      CipQuery query{y, *state_.edge_with(y, a1), a1, v, x_bans, options_.cip_node_limit};
      auto r = search(query, false);
      if (!r.cip) continue;
      const Cip& cip = *r.cip;
      auto at = std::find(cip.path.begin(), cip.path.end(), v);
      if (at != cip.path.end()) ++stats_.centre_entries;
      const std::size_t pos = static_cast<std::size_t>(at - cip.path.begin());
      if (at != cip.path.end() && pos + 1 < cip.length()) {
        // v internal, between y_j = p_{pos-1} and y_k = p_{pos+1}.
        auto j = fan.leaf_index(cip.path[pos - 1]);
        auto k = fan.leaf_index(cip.path[pos + 1]);
        if (j && k && *k < *j && cip.colours[pos - 1] != cip.colours[pos + 1]) {
          auto [head, tail] = cut_cip(cip, pos + 1);
          log("partial interchange from the centre");
          ++stats_.partial_interchanges;
          apply(tail);
          return settle(fan);
        }
      }
      apply(cip);
      return settle(fan);
    }
    fail("no CIP from y_i for any admissible a_1");
  }

  // After an interchange that may have touched v: keep the longest prefix of
  // the fan that still satisfies (*), rotate if any prefix can be closed, and
  // otherwise continue growing from that prefix.
  Outcome settle(Fan& fan) {
    const VertexId v = fan.centre();
    std::size_t m = 1;
    while (m < fan.size()) {
      const Colour t = fan.colours()[m - 1];
      if (state_.colour(fan.edges()[m]) != t || !state_.missing(fan.leaves()[m - 1], t)) break;
      ++m;
    }
    if (m < fan.size()) log("fan cut back to " + str(m) + " leaves");
    fan.truncate(m);
    assert_fan(fan);
    for (std::size_t j = 0; j < m; ++j) {
      for (Colour c : lists_[fan.edges()[j]]) {
        if (state_.missing(v, c) && state_.missing(fan.leaves()[j], c)) {
          fan.truncate(j + 1);
          rotate(fan, c);
          return Outcome::done;
        }
      }
    }
    return Outcome::again;
  }

  void assert_fan(const Fan& fan) const {
    if (auto bad = fan.check(state_)) throw InvariantError("fan condition broken: " + *bad);
  }

  void log(std::string line) { log_.push_back(std::move(line)); }

  [[noreturn]] void fail(const std::string& reason) {
    log("failure: " + reason);
    throw SolveFailure(f_, reason, log_);
  }

  EdgeColouringState& state_;
  const Graph& graph_;
  const ListAssignment& lists_;
  const SolverOptions& options_;
  EdgeStats& stats_;
  EdgeId f_ = 0;
  std::vector<std::string> log_;
};

void require_list_sizes(const Graph& g, const ListAssignment& lists, const SolverOptions& options) {
  require_matching(g, lists);
  if (options.force || g.num_edges() == 0) return;
  const std::size_t need = max_degree(g) + 2;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (lists[e].size() < need) {
      throw InputError("edge " + str(e) + " has " + str(lists[e].size()) +
                       " colours but Δ+2 = " + str(need) + " are required");
    }
  }
}

}  // namespace

void extend_one_edge(EdgeColouringState& state, EdgeId f, const SolverOptions& options,
                     EdgeStats& stats) {
  const std::size_t before = state.coloured_count();
  Extender(state, options, stats).run(f);
  if (state.coloured_count() != before + 1 || !state.colour(f)) {
    throw InvariantError("insertion did not colour exactly one more edge");
  }
}

PartialEdgeColouring extend_one_edge(const Graph& g, const ListAssignment& lists,
                                     const PartialEdgeColouring& col, EdgeId f,
                                     const SolverOptions& options, EdgeStats* stats) {
  require_list_sizes(g, lists, options);
  if (f >= g.num_edges()) throw InputError("edge " + str(f) + " out of range");
  EdgeColouringState state(g, lists, col);
  EdgeStats local;
  extend_one_edge(state, f, options, stats ? *stats : local);
  return state.colouring();
}

SolveResult colour_edges(const Graph& g, const ListAssignment& lists,
                         const SolverOptions& options) {
  require_list_sizes(g, lists, options);
  EdgeColouringState state(g, lists);
  SolveResult result;
  result.report.edges.reserve(g.num_edges());
  for (EdgeId f = 0; f < g.num_edges(); ++f) {
    EdgeStats stats;
    extend_one_edge(state, f, options, stats);
    result.report.edges.push_back(stats);
  }
  result.colouring = complete_colouring(state.colouring());
  if (options.inject_fault) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      for (const auto& inc : g.incident(g.edge(e).u)) {
        if (inc.edge != e) {
          result.colouring[e] = result.colouring[inc.edge];
          return result;
        }
      }
    }
    if (g.num_edges() > 0) result.colouring[0] = lists[0].empty() ? 0 : lists[0].back() + 1;
    return result;
  }
  if (auto bad = check_edge_colouring(g, lists, result.colouring)) {
    throw InvariantError("solver produced an invalid colouring: " + bad->message);
  }
  return result;
}

}  // namespace lec
