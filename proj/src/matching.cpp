#include "fairhouse/matching.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

namespace fairhouse {

BipartiteGraph validate_graph(int left_count, int right_count,
                              const std::vector<std::pair<int, int>>& edges) {
    require(left_count >= 0 && right_count >= 0, ErrorCode::InvalidArgument,
            "vertex counts must be non-negative");
    BipartiteGraph g;
    g.left_count = left_count;
    g.right_count = right_count;
    g.adj.resize(left_count);
    for (const auto& [l, r] : edges) {
        require(l >= 0 && l < left_count, ErrorCode::IndexOutOfRange,
                "left endpoint out of range: " + std::to_string(l));
        require(r >= 0 && r < right_count, ErrorCode::IndexOutOfRange,
                "right endpoint out of range: " + std::to_string(r));
        g.adj[l].push_back(r);
    }
    for (auto& neighbours : g.adj) {
        std::sort(neighbours.begin(), neighbours.end());
        require(std::adjacent_find(neighbours.begin(), neighbours.end()) == neighbours.end(),
                ErrorCode::InvalidArgument, "duplicate edge");
    }
    return g;
}

namespace detail {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

struct HopcroftKarpState {
    const BipartiteGraph& g;
    std::vector<int> match_left;
    std::vector<int> match_right;
    std::vector<int> layer;

    explicit HopcroftKarpState(const BipartiteGraph& graph)
        : g(graph),
          match_left(graph.left_count, -1),
          match_right(graph.right_count, -1),
          layer(graph.left_count, kInf) {}

    bool bfs() {
        std::queue<int> frontier;
        for (int l = 0; l < g.left_count; ++l) {
            if (match_left[l] == -1) {
                layer[l] = 0;
                frontier.push(l);
            } else {
                layer[l] = kInf;
            }
        }
        bool found_free_right = false;
        while (!frontier.empty()) {
            int l = frontier.front();
            frontier.pop();
            for (int r : g.adj[l]) {
                int next = match_right[r];
                if (next == -1) {
                    found_free_right = true;
                } else if (layer[next] == kInf) {
                    layer[next] = layer[l] + 1;
                    frontier.push(next);
                }
            }
        }
        return found_free_right;
    }

    bool dfs(int l) {
        for (int r : g.adj[l]) {
            int next = match_right[r];
            if (next == -1 || (layer[next] == layer[l] + 1 && dfs(next))) {
                match_left[l] = r;
                match_right[r] = l;
                return true;
            }
        }
        layer[l] = kInf;
        return false;
    }
};

}  // namespace

MatchArrays hopcroft_karp(const BipartiteGraph& g) {
    HopcroftKarpState state(g);
    MatchArrays result;
    result.size = 0;
    while (state.bfs()) {
        for (int l = 0; l < g.left_count; ++l) {
            if (state.match_left[l] == -1 && state.dfs(l)) ++result.size;
        }
    }
    result.match_left = std::move(state.match_left);
    result.match_right = std::move(state.match_right);
    return result;
}

}  // namespace detail

Matching maximum_matching(const BipartiteGraph& g) {
    detail::MatchArrays arrays = detail::hopcroft_karp(g);
    Matching matching;
    matching.pairs.reserve(arrays.size);
    for (int l = 0; l < g.left_count; ++l) {
        if (arrays.match_left[l] != -1) matching.pairs.emplace_back(l, arrays.match_left[l]);
    }
    return matching;
}

bool has_perfect_left_matching(const BipartiteGraph& g) {
    if (g.left_count > g.right_count) return false;
    return detail::hopcroft_karp(g).size == g.left_count;
}

Assignment extend_to_injection(int agent_count, const std::vector<int>& houses,
                               const Matching& partial) {
    require(agent_count >= 0, ErrorCode::InvalidArgument, "agent count must be non-negative");
    require(houses.size() == static_cast<std::size_t>(agent_count), ErrorCode::InvalidArgument,
            "house set size must equal the agent count");
    require(std::is_sorted(houses.begin(), houses.end()) &&
                std::adjacent_find(houses.begin(), houses.end()) == houses.end(),
            ErrorCode::InvalidArgument, "house set must be strictly ascending");

    Assignment result;
    result.house_of.assign(agent_count, -1);
    std::vector<char> house_used(houses.size(), 0);
    for (const auto& [agent, house] : partial.pairs) {
        require(agent >= 0 && agent < agent_count, ErrorCode::IndexOutOfRange,
                "matched agent out of range");
        auto it = std::lower_bound(houses.begin(), houses.end(), house);
        require(it != houses.end() && *it == house, ErrorCode::PartialNotWithinSet,
                "matched house " + std::to_string(house) + " is not in the house set");
        std::size_t pos = static_cast<std::size_t>(it - houses.begin());
        require(result.house_of[agent] == -1, ErrorCode::NotAnInjection,
                "agent matched twice in partial matching");
        require(!house_used[pos], ErrorCode::NotAnInjection,
                "house matched twice in partial matching");
        result.house_of[agent] = house;
        house_used[pos] = 1;
    }
    std::size_t next_free = 0;
    for (int agent = 0; agent < agent_count; ++agent) {
        if (result.house_of[agent] != -1) continue;
        while (house_used[next_free]) ++next_free;
        result.house_of[agent] = houses[next_free];
        house_used[next_free] = 1;
    }
    return result;
}

}  // namespace fairhouse
