#include "fairhouse/json_io.hpp"

#include <initializer_list>
#include <limits>

namespace fairhouse {

namespace {

void expect_keys(const Json& j, std::initializer_list<const char*> required,
                 std::initializer_list<const char*> optional = {}) {
    require(j.is_object(), ErrorCode::ParseError, "expected a JSON object");
    for (const char* key : required) {
        require(j.contains(key), ErrorCode::ParseError,
                std::string("missing required field \"") + key + "\"");
    }
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* candidate : required) known = known || key == candidate;
        for (const char* candidate : optional) known = known || key == candidate;
        require(known, ErrorCode::ParseError, "unexpected field \"" + key + "\"");
    }
}

std::int64_t get_integer(const Json& j, const char* what) {
    require(j.is_number_integer(), ErrorCode::ParseError,
            std::string(what) + " must be an integer");
    return j.get<std::int64_t>();
}

int get_int(const Json& j, const char* what) {
    std::int64_t value = get_integer(j, what);
    require(value >= std::numeric_limits<int>::min() && value <= std::numeric_limits<int>::max(),
            ErrorCode::ParseError, std::string(what) + " is out of range");
    return static_cast<int>(value);
}

}  // namespace

Json parse_json_text(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    require(!j.is_discarded(), ErrorCode::ParseError, "malformed JSON");
    return j;
}

Instance instance_from_json(const Json& j) {
    expect_keys(j, {"n", "m", "utilities"}, {"reduction", "params", "k"});
    int n = get_int(j["n"], "n");
    int m = get_int(j["m"], "m");
    require(j["utilities"].is_array(), ErrorCode::ParseError, "utilities must be an array");
    std::vector<std::vector<Utility>> utilities;
    utilities.reserve(j["utilities"].size());
    for (const auto& row_json : j["utilities"]) {
        require(row_json.is_array(), ErrorCode::ParseError, "utility rows must be arrays");
        std::vector<Utility> row;
        row.reserve(row_json.size());
        for (const auto& cell : row_json) row.push_back(get_integer(cell, "utility"));
        utilities.push_back(std::move(row));
    }
    return validate_instance(n, m, std::move(utilities));
}

Assignment assignment_from_json(const Json& j) {
    expect_keys(j, {"assignment"});
    require(j["assignment"].is_array(), ErrorCode::ParseError, "assignment must be an array");
    Assignment phi;
    phi.house_of.reserve(j["assignment"].size());
    for (const auto& cell : j["assignment"]) {
        phi.house_of.push_back(get_int(cell, "assigned house"));
    }
    return phi;
}

BipartiteGraph graph_from_json(const Json& j) {
    expect_keys(j, {"left", "right", "edges"});
    int left = get_int(j["left"], "left");
    int right = get_int(j["right"], "right");
    require(j["edges"].is_array(), ErrorCode::ParseError, "edges must be an array");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(j["edges"].size());
    for (const auto& edge : j["edges"]) {
        require(edge.is_array() && edge.size() == 2, ErrorCode::ParseError,
                "each edge must be a [left, right] pair");
        edges.emplace_back(get_int(edge[0], "edge endpoint"), get_int(edge[1], "edge endpoint"));
    }
    return validate_graph(left, right, edges);
}

SetCoverageInstance set_coverage_from_json(const Json& j) {
    expect_keys(j, {"elements", "subsets", "q", "ell"});
    int elements = get_int(j["elements"], "elements");
    require(j["subsets"].is_array(), ErrorCode::ParseError, "subsets must be an array");
    std::vector<std::vector<int>> subsets;
    subsets.reserve(j["subsets"].size());
    for (const auto& subset_json : j["subsets"]) {
        require(subset_json.is_array(), ErrorCode::ParseError, "each subset must be an array");
        std::vector<int> subset;
        subset.reserve(subset_json.size());
        for (const auto& member : subset_json) subset.push_back(get_int(member, "subset member"));
        subsets.push_back(std::move(subset));
    }
    return validate_set_coverage(elements, std::move(subsets), get_int(j["q"], "q"),
                                 get_int(j["ell"], "ell"));
}

X3CInstance x3c_from_json(const Json& j) {
    expect_keys(j, {"universe", "triples"});
    int universe = get_int(j["universe"], "universe");
    require(j["triples"].is_array(), ErrorCode::ParseError, "triples must be an array");
    std::vector<std::array<int, 3>> triples;
    triples.reserve(j["triples"].size());
    for (const auto& triple_json : j["triples"]) {
        require(triple_json.is_array() && triple_json.size() == 3, ErrorCode::ParseError,
                "each triple must have exactly 3 members");
        triples.push_back({get_int(triple_json[0], "triple member"),
                           get_int(triple_json[1], "triple member"),
                           get_int(triple_json[2], "triple member")});
    }
    return validate_x3c(universe, std::move(triples));
}

Json instance_to_json(const Instance& inst) {
    Json j;
    j["n"] = inst.n;
    j["m"] = inst.m;
    j["utilities"] = inst.utilities;
    return j;
}

Json assignment_to_json(const Assignment& phi) {
    Json j;
    j["assignment"] = phi.house_of;
    return j;
}

Json graph_to_json(const BipartiteGraph& g) {
    Json j;
    j["left"] = g.left_count;
    j["right"] = g.right_count;
    Json edges = Json::array();
    for (int l = 0; l < g.left_count; ++l) {
        for (int r : g.adj[l]) edges.push_back(Json::array({l, r}));
    }
    j["edges"] = std::move(edges);
    return j;
}

Json set_coverage_to_json(const SetCoverageInstance& sc) {
    Json j;
    j["elements"] = sc.element_count;
    j["subsets"] = sc.subsets;
    j["q"] = sc.q;
    j["ell"] = sc.ell;
    return j;
}

Json x3c_to_json(const X3CInstance& x) {
    Json j;
    j["universe"] = x.universe_size;
    j["triples"] = x.triples;
    return j;
}

Json report_to_json(const FairnessReport& report) {
    Json j;
    j["ef_flags"] = report.ef_flags;
    j["prop_flags"] = report.prop_flags;
    j["received"] = report.received;
    j["ef_count"] = report.ef_count;
    j["equitable"] = report.equitable;
    j["inequity"] = report.inequity;
    return j;
}

Json biclique_to_json(const Biclique& biclique) {
    Json j;
    j["left"] = biclique.left;
    j["right"] = biclique.right;
    return j;
}

Json solve_result_json(const std::optional<Assignment>& phi, std::optional<Utility> value) {
    Json j;
    if (!phi) {
        j["status"] = "none";
        return j;
    }
    j["status"] = "found";
    j["assignment"] = phi->house_of;
    if (value) j["value"] = *value;
    return j;
}

}  // namespace fairhouse
