#include "lec/cip.hpp"

#include <algorithm>
#include <sstream>

namespace lec {

namespace {

bool in(const std::vector<Colour>& v, Colour c) {
  return std::find(v.begin(), v.end(), c) != v.end();
}

std::string str(std::size_t x) { return std::to_string(x); }

}  // namespace

bool ForbiddenChoice::bans_incoming(VertexId x, Colour c) const {
  auto it = incoming.find(x);
  return it != incoming.end() && in(it->second, c);
}

bool ForbiddenChoice::bans_gain(VertexId x, Colour c) const {
  auto it = gained.find(x);
  return it != gained.end() && in(it->second, c);
}

void TextCipTracer::push(VertexId p, Colour a) { out_ << "PUSH " << p << ' ' << a << '\n'; }
void TextCipTracer::pop() { out_ << "POP\n"; }
void TextCipTracer::accept(const Cip& cip) {
  out_ << "ACCEPT s=" << cip.length() << '\n' << cip_to_json(cip) << '\n';
}
void TextCipTracer::fail(std::size_t nodes) { out_ << "FAIL nodes=" << nodes << '\n'; }

namespace {

class Searcher {
 public:
  Searcher(const EdgeColouringState& state, const CipQuery& query, CipTracer* tracer)
      : state_(state),
        graph_(state.graph()),
        lists_(state.lists()),
        query_(query),
        tracer_(tracer),
        incoming_(graph_.num_vertices(), nullptr),
        gained_(graph_.num_vertices(), nullptr),
        on_path_(graph_.num_vertices(), 0) {
    for (const auto& [x, cs] : query.forbidden.incoming) incoming_[x] = &cs;
    for (const auto& [x, cs] : query.forbidden.gained) gained_[x] = &cs;
  }

  CipSearchResult run() {
    const Edge& first = graph_.edge(query_.first_edge);
    const VertexId p1 = query_.start;
    const VertexId p2 = first.other(p1);
    path_ = {p1, p2};
    edges_ = {query_.first_edge};
    colours_ = {query_.first_colour};
    restricted_ = {0, 0};
    on_path_[p1] = on_path_[p2] = 1;
    if (tracer_) tracer_->push(p1, query_.first_colour);

    CipSearchResult result;
    if (extend()) {
      Cip cip;
      cip.path = path_;
      cip.edges = edges_;
      cip.colours = colours_;
      cip.restricted_to = query_.restriction;
      for (std::size_t k = 1; k < path_.size(); ++k)
        if (restricted_[k]) cip.restricted_vertices.push_back(path_[k]);
      if (tracer_) tracer_->accept(cip);
      result.cip = std::move(cip);
    } else if (tracer_) {
      tracer_->fail(nodes_);
    }
    result.nodes = nodes_;
    result.budget_exhausted = exhausted_;
    return result;
  }

 private:
  struct Step {
    Colour colour;
    EdgeId next_edge;
    VertexId next_vertex;
  };

  bool banned(const std::vector<const std::vector<Colour>*>& bans, VertexId x, Colour c) const {
    return bans[x] && in(*bans[x], c);
  }

  // Path holds p_1..p_k and a_1..a_{k-1}; chooses a_k for edge p_{k-1} p_k.
  bool extend() {
    if (++nodes_ > query_.node_limit) {
      exhausted_ = true;
      return false;
    }
    const std::size_t k = path_.size();
    const VertexId prev = path_[k - 2];
    const VertexId cur = path_[k - 1];
    const EdgeId edge = edges_[k - 2];
    const Colour old = colours_[k - 2];
    const std::optional<EdgeId> prev_edge =
        k >= 3 ? std::optional<EdgeId>(edges_[k - 3]) : std::nullopt;

    std::optional<Colour> terminal;
    std::vector<Step> steps;
    bool restricted = false;
    for (Colour c : lists_[edge]) {
      if (c == old) continue;
      // At p_{k-1} the only edge that may already carry c is the previous
      // path edge, which gives c up in the interchange.
      auto owner = state_.edge_with(prev, c);
      if (owner && owner != prev_edge) continue;
      if (!owner && banned(gained_, prev, c)) continue;
      if (banned(incoming_, cur, c)) {
        restricted = true;
        continue;
      }
      auto next = state_.edge_with(cur, c);
      if (!next) {
        if (banned(gained_, cur, c)) {
          restricted = true;
          continue;
        }
        if (!terminal) terminal = c;
        continue;
      }
      const VertexId z = graph_.edge(*next).other(cur);
      if (on_path_[z]) continue;
      steps.push_back({c, *next, z});
    }

    restricted_[k - 1] = restricted;
    if (terminal) {
      colours_.push_back(*terminal);
      if (tracer_) tracer_->push(cur, *terminal);
      return true;
    }
    for (const Step& step : steps) {
      colours_.push_back(step.colour);
      path_.push_back(step.next_vertex);
      edges_.push_back(step.next_edge);
      restricted_.push_back(0);
      on_path_[step.next_vertex] = 1;
      if (tracer_) tracer_->push(cur, step.colour);
      if (extend()) return true;
      if (tracer_) tracer_->pop();
      on_path_[step.next_vertex] = 0;
      restricted_.pop_back();
      edges_.pop_back();
      path_.pop_back();
      colours_.pop_back();
      if (exhausted_) return false;
    }
    return false;
  }

  const EdgeColouringState& state_;
  const Graph& graph_;
  const ListAssignment& lists_;
  const CipQuery& query_;
  CipTracer* tracer_;
  std::vector<const std::vector<Colour>*> incoming_;
  std::vector<const std::vector<Colour>*> gained_;
  std::vector<char> on_path_;
  std::vector<VertexId> path_;
  std::vector<EdgeId> edges_;
  std::vector<Colour> colours_;
  std::vector<char> restricted_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

void check_query(const EdgeColouringState& state, const CipQuery& q) {
  const Graph& g = state.graph();
  if (q.first_edge >= g.num_edges()) throw InputError("CIP start edge out of range");
  const Edge& e = g.edge(q.first_edge);
  if (!e.has(q.start)) throw InputError("CIP start vertex is not an endpoint of the start edge");
  if (state.colour(q.first_edge) != q.first_colour) {
    throw InputError("CIP start edge is not coloured with the first colour");
  }
  if (q.restriction) {
    const VertexId w = *q.restriction;
    if (w >= g.num_vertices()) throw InputError("restriction vertex out of range");
    if (e.has(w)) throw InputError("restriction vertex lies on the start edge");
  }
  for (const auto* bans : {&q.forbidden.incoming, &q.forbidden.gained}) {
    for (const auto& [x, cs] : *bans) {
      if (x >= g.num_vertices()) throw InputError("forbidden-choice vertex out of range");
      if (!q.restriction) throw InputError("forbidden choices need a restriction vertex");
      if (!g.adjacent(x, *q.restriction)) {
        throw InputError("forbidden-choice vertex " + str(x) +
                         " is not a neighbour of the restriction vertex");
      }
    }
  }
}

}  // namespace

CipSearchResult search_cip(const EdgeColouringState& state, const CipQuery& query,
                           CipTracer* tracer) {
  check_query(state, query);
  return Searcher(state, query, tracer).run();
}

Cip find_cip(const EdgeColouringState& state, const CipQuery& query, CipTracer* tracer) {
  auto r = search_cip(state, query, tracer);
  if (!r.cip) throw NoCipFound(r.nodes, r.budget_exhausted);
  return std::move(*r.cip);
}

Cip find_cip(const Graph& g, const ListAssignment& lists, const PartialEdgeColouring& col,
             const CipQuery& query, CipTracer* tracer) {
  EdgeColouringState state(g, lists, col);
  return find_cip(state, query, tracer);
}

std::optional<CipViolation> validate_cip(const Graph& g, const ListAssignment& lists,
                                         const PartialEdgeColouring& col, const Cip& cip,
                                         const ForbiddenChoice* forbidden) {
  auto fail = [](std::string clause, std::size_t index, std::string msg) {
    return std::optional<CipViolation>(CipViolation{std::move(clause), index, std::move(msg)});
  };
  const std::size_t s = cip.path.size();
  if (s < 2) return fail("length", 0, "a CIP needs at least two vertices");
  if (cip.edges.size() != s - 1 || cip.colours.size() != s) {
    return fail("shape", 0, "edge and colour sequences do not match the path length");
  }
  if (col.size() != g.num_edges() || lists.size() != g.num_edges()) {
    return fail("shape", 0, "colouring or lists do not match the graph");
  }
  for (std::size_t i = 0; i < s; ++i) {
    if (cip.path[i] >= g.num_vertices()) return fail("range", i + 1, "vertex out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (cip.path[j] == cip.path[i]) {
        return fail("distinct", i + 1, "vertex " + str(cip.path[i]) + " repeats on the path");
      }
    }
  }
  // Colour of each edge after the interchange, for path edges only.
  std::vector<std::optional<Colour>> after(g.num_edges());
  for (std::size_t i = 0; i + 1 < s; ++i) {
    auto e = g.find_edge(cip.path[i], cip.path[i + 1]);
    if (!e || *e != cip.edges[i]) {
      return fail("adjacency", i + 1, "p_" + str(i + 1) + " p_" + str(i + 2) + " is not the recorded edge");
    }
    if (col[*e] != cip.colours[i]) {
      return fail("first-colouring", i + 1, "edge " + str(*e) + " is not currently coloured " +
                                                str(cip.colours[i]));
    }
    if (!lists.contains(*e, cip.colours[i]) || !lists.contains(*e, cip.colours[i + 1])) {
      return fail("list", i + 1, "edge " + str(*e) + " cannot take both of its colours");
    }
    after[*e] = cip.colours[i + 1];
  }
  for (std::size_t k = 0; k < s; ++k) {
    const VertexId x = cip.path[k];
    std::vector<Colour> before_at, after_at;
    for (const auto& inc : g.incident(x)) {
      if (col[inc.edge]) before_at.push_back(*col[inc.edge]);
      if (after[inc.edge]) {
        after_at.push_back(*after[inc.edge]);
      } else if (col[inc.edge]) {
        after_at.push_back(*col[inc.edge]);
      }
    }
    for (auto* v : {&before_at, &after_at}) {
      std::sort(v->begin(), v->end());
      if (std::adjacent_find(v->begin(), v->end()) != v->end()) {
        return fail(v == &before_at ? "first-colouring" : "second-colouring", k + 1,
                    "colour repeats at p_" + str(k + 1));
      }
    }
  }
  const VertexId ps = cip.path[s - 1];
  for (const auto& inc : g.incident(ps)) {
    if (col[inc.edge] == cip.colours[s - 1]) {
      return fail("terminal", s, "a_s is already present at p_s");
    }
  }
  if (cip.restricted_to) {
    const VertexId w = *cip.restricted_to;
    if (w == cip.path[0] || w == cip.path[1]) {
      return fail("restriction", 0, "restriction vertex lies on the first edge");
    }
    for (VertexId x : cip.restricted_vertices) {
      auto pos = std::find(cip.path.begin() + 1, cip.path.end(), x);
      if (pos == cip.path.end()) {
        return fail("restricted-vertex", 0, "restricted vertex " + str(x) + " is not p_2..p_s");
      }
      const std::size_t k = static_cast<std::size_t>(pos - cip.path.begin());  // 0-based
      auto xw = g.find_edge(x, w);
      if (!xw) return fail("restriction-adjacent", k + 1, "restricted vertex is not a neighbour of w");
      const EdgeId in_edge = cip.edges[k - 1];
      if (!lists.contains(in_edge, cip.colours[k - 1])) {
        return fail("restriction-list", k + 1, "a_{k-1} is not in L(p_{k-1} p_k)");
      }
      bool alternative = false;
      for (Colour c : lists[in_edge])
        alternative = alternative || (c != cip.colours[k - 1] && lists.contains(*xw, c));
      if (!alternative) {
        return fail("restriction-alternative", k + 1,
                    "no colour of L(p_{k-1} p_k) ∩ L(p_k w) differs from a_{k-1}");
      }
    }
  } else if (!cip.restricted_vertices.empty()) {
    return fail("restriction", 0, "restricted vertices without a restriction vertex");
  }
  if (forbidden) {
    for (std::size_t k = 1; k < s; ++k) {
      if (forbidden->bans_incoming(cip.path[k], cip.colours[k])) {
        return fail("forbidden", k + 1, "banned incoming recolour at p_" + str(k + 1));
      }
    }
    if (forbidden->bans_gain(cip.path[0], cip.colours[1])) {
      return fail("forbidden", 1, "p_1 gains a banned colour");
    }
    for (std::size_t k = 1; k + 1 < s; ++k) {
      if (cip.colours[k + 1] != cip.colours[k - 1] &&
          forbidden->bans_gain(cip.path[k], cip.colours[k + 1])) {
        return fail("forbidden", k + 1, "p_" + str(k + 1) + " gains a banned colour");
      }
    }
    if (forbidden->bans_gain(ps, cip.colours[s - 1])) {
      return fail("forbidden", s, "p_s gains a banned colour");
    }
  }
  return std::nullopt;
}

void apply_interchange(EdgeColouringState& state, const Cip& cip) {
  if (auto bad = validate_cip(state.graph(), state.lists(), state.colouring(), cip)) {
    throw InvariantError("refusing to apply an invalid CIP (" + bad->clause + "): " + bad->message);
  }
  for (EdgeId e : cip.edges) state.clear(e);
  for (std::size_t i = 0; i < cip.edges.size(); ++i) state.assign(cip.edges[i], cip.colours[i + 1]);
}

PartialEdgeColouring apply_interchange(const Graph& g, const ListAssignment& lists,
                                       const PartialEdgeColouring& col, const Cip& cip) {
  EdgeColouringState state(g, lists, col);
  apply_interchange(state, cip);
  return state.colouring();
}

Cip reverse_cip(const Cip& cip) {
  Cip r;
  r.path.assign(cip.path.rbegin(), cip.path.rend());
  r.edges.assign(cip.edges.rbegin(), cip.edges.rend());
  r.colours.assign(cip.colours.rbegin(), cip.colours.rend());
  return r;
}

std::pair<Cip, Cip> cut_cip(const Cip& cip, std::size_t t) {
  const std::size_t s = cip.path.size();
  if (t < 2 || t + 1 > s) throw InputError("cut position must satisfy 2 <= t <= s-1");
  if (cip.colours[t - 2] == cip.colours[t]) {
    throw InputError("cannot cut where a_{t-1} == a_{t+1}");
  }
  Cip head, tail;
  head.path.assign(cip.path.begin(), cip.path.begin() + t);
  head.edges.assign(cip.edges.begin(), cip.edges.begin() + (t - 1));
  head.colours.assign(cip.colours.begin(), cip.colours.begin() + t);
  tail.path.assign(cip.path.begin() + (t - 1), cip.path.end());
  tail.edges.assign(cip.edges.begin() + (t - 1), cip.edges.end());
  tail.colours.assign(cip.colours.begin() + (t - 1), cip.colours.end());
  auto restrict = [&](Cip& part) {
    if (!cip.restricted_to) return;
    const VertexId w = *cip.restricted_to;
    // A part that starts at or next to w can no longer be w-restricted.
    if (part.path[0] == w || part.path[1] == w) return;
    part.restricted_to = w;
    for (VertexId x : cip.restricted_vertices)
      if (std::find(part.path.begin() + 1, part.path.end(), x) != part.path.end())
        part.restricted_vertices.push_back(x);
  };
  restrict(head);
  restrict(tail);
  return {std::move(head), std::move(tail)};
}

std::string cip_to_json(const Cip& cip) {
  std::ostringstream out;
  out << "{\"path\":[";
  for (std::size_t i = 0; i < cip.path.size(); ++i) out << (i ? "," : "") << cip.path[i];
  out << "],\"colours\":[";
  for (std::size_t i = 0; i < cip.colours.size(); ++i) out << (i ? "," : "") << cip.colours[i];
  out << "]}";
  return out.str();
}

std::string cip_to_dot(const Cip& cip, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t i = 0; i + 1 < cip.path.size(); ++i) {
    out << "  " << cip.path[i] << " -- " << cip.path[i + 1] << " [label=\"" << cip.colours[i]
        << "/" << cip.colours[i + 1] << "\"];\n";
  }
  if (cip.restricted_to) out << "  " << *cip.restricted_to << " [shape=box];\n";
  out << "}\n";
  return out.str();
}

}  // namespace lec
