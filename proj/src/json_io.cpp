#include "lec/json_io.hpp"

#include <algorithm>

namespace lec {

namespace {

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(0, std::string("missing field \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(0, std::string("field \"") + key + "\" has the wrong type");
  }
}

std::vector<ColourList> colour_lists(const Json& j, const char* key) {
  return field<std::vector<ColourList>>(j, key);
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based; count the newlines before it.
    const auto end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(text.begin(), text.begin() + static_cast<long>(end), '\n'));
    throw ParseError(line, "invalid JSON");
  }
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json lists_to_json(const ListAssignment& lists) {
  Json j;
  j["edge_lists"] = lists.lists();
  j["vertex_lists"] = nullptr;
  return j;
}

Json lists_to_json(const TotalListAssignment& lists) {
  Json j;
  j["edge_lists"] = lists.edge_lists.lists();
  j["vertex_lists"] = lists.vertex_lists;
  return j;
}

ListsFile lists_from_json(const Json& j) {
  ListsFile out{ListAssignment(colour_lists(j, "edge_lists")), std::nullopt};
  if (j.contains("vertex_lists") && !j["vertex_lists"].is_null()) {
    std::vector<ColourList> vl;
    for (auto& l : colour_lists(j, "vertex_lists")) vl.push_back(normalize_list(std::move(l)));
    out.vertex_lists = std::move(vl);
  }
  return out;
}

Json colouring_to_json(const std::vector<Colour>& edge_colours,
                       const std::optional<VertexColouring>& vertex_colours, const Json& stats) {
  Json j;
  j["edge_colours"] = edge_colours;
  if (vertex_colours) {
    j["vertex_colours"] = *vertex_colours;
  } else {
    j["vertex_colours"] = nullptr;
  }
  j["stats"] = stats;
  return j;
}

ColouringFile colouring_from_json(const Json& j) {
  ColouringFile out{field<std::vector<Colour>>(j, "edge_colours"), std::nullopt};
  if (j.contains("vertex_colours") && !j["vertex_colours"].is_null()) {
    out.vertex_colours = field<VertexColouring>(j, "vertex_colours");
  }
  return out;
}

Json report_to_json(const SolveReport& report) {
  Json j;
  j["edges"] = report.edges.size();
  j["direct_edges"] = report.direct_edges();
  j["cip_searches"] = report.total_cip_searches();
  j["interchanges"] = report.total_interchanges();
  j["centre_entries"] = report.centre_entries();
  j["max_fan_length"] = report.max_fan_length();
  j["max_cip_length"] = report.max_cip_length();
  return j;
}

Json violation_to_json(const Violation& v) {
  Json j;
  j["clause"] = v.clause;
  j["edges"] = v.edges;
  j["vertices"] = v.vertices;
  j["message"] = v.message;
  return j;
}

Json hall_report_to_json(const HallReport& r) {
  Json j;
  j["value"] = r.value;
  j["witness"] = r.witness;
  if (!r.witness_edges.empty()) j["witness_edges"] = r.witness_edges;
  j["numerator"] = r.numerator;
  j["denominator"] = r.denominator;
  return j;
}

HallReport hall_report_from_json(const Json& j) {
  HallReport r{field<std::size_t>(j, "value"), field<std::vector<VertexId>>(j, "witness"), {},
               field<std::size_t>(j, "numerator"), field<std::size_t>(j, "denominator")};
  if (j.contains("witness_edges")) r.witness_edges = field<std::vector<EdgeId>>(j, "witness_edges");
  return r;
}

Json hall_check_to_json(const HallCheck& c) {
  Json j;
  j["satisfied"] = c.satisfied;
  if (!c.satisfied) {
    j["witness"] = c.witness;
    if (!c.witness_edges.empty()) j["witness_edges"] = c.witness_edges;
    j["demand"] = c.demand;
    j["supply"] = c.supply;
  }
  return j;
}

}  // namespace lec
