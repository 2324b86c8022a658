#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lec/colouring.hpp"
#include "lec/fan_solver.hpp"
#include "lec/hall.hpp"
#include "lec/list_assignment.hpp"

namespace lec {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with the line number.
Json parse_json(const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump_json(const Json& j);

/// Lists as read from a file: vertex lists are present only for total inputs.
struct ListsFile {
  ListAssignment edge_lists;
  std::optional<std::vector<ColourList>> vertex_lists;
};

Json lists_to_json(const ListAssignment& lists);
Json lists_to_json(const TotalListAssignment& lists);
ListsFile lists_from_json(const Json& j);

struct ColouringFile {
  std::vector<Colour> edge_colours;
  std::optional<VertexColouring> vertex_colours;
};

Json colouring_to_json(const std::vector<Colour>& edge_colours,
                       const std::optional<VertexColouring>& vertex_colours,
                       const Json& stats = Json::object());
ColouringFile colouring_from_json(const Json& j);

Json report_to_json(const SolveReport& report);
Json violation_to_json(const Violation& v);

Json hall_report_to_json(const HallReport& r);
HallReport hall_report_from_json(const Json& j);
Json hall_check_to_json(const HallCheck& c);

}  // namespace lec
