#ifndef FAIRHOUSE_JSON_IO_HPP
#define FAIRHOUSE_JSON_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "fairhouse/problems.hpp"

namespace fairhouse {

// Insertion-ordered JSON so serialized output has a stable, documented field
// order and byte-identical reruns.
using Json = nlohmann::ordered_json;

// Parsing is strict: unknown fields, missing fields, and non-integer numbers
// are rejected with ParseError. Instance files additionally accept the
// metadata fields ("reduction", "params", "k") that `reduce` emits, so
// reduction outputs can be fed back into `check`, `solve`, and `verify`.

Json parse_json_text(const std::string& text);

Instance instance_from_json(const Json& j);
Assignment assignment_from_json(const Json& j);
BipartiteGraph graph_from_json(const Json& j);
SetCoverageInstance set_coverage_from_json(const Json& j);
X3CInstance x3c_from_json(const Json& j);

Json instance_to_json(const Instance& inst);
Json assignment_to_json(const Assignment& phi);
Json graph_to_json(const BipartiteGraph& g);
Json set_coverage_to_json(const SetCoverageInstance& sc);
Json x3c_to_json(const X3CInstance& x);
Json report_to_json(const FairnessReport& report);
Json biclique_to_json(const Biclique& biclique);

// Solver result envelope: {"status":"found","assignment":[...],"value":v} or
// {"status":"none"}.
Json solve_result_json(const std::optional<Assignment>& phi, std::optional<Utility> value);

}  // namespace fairhouse

#endif
