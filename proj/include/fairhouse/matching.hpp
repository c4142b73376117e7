#ifndef FAIRHOUSE_MATCHING_HPP
#define FAIRHOUSE_MATCHING_HPP

#include <utility>
#include <vector>

#include "fairhouse/core.hpp"

namespace fairhouse {

// Bipartite graph with left_count and right_count vertices; adj[l] is the
// sorted list of right neighbours of left vertex l.
struct BipartiteGraph {
    int left_count = 0;
    int right_count = 0;
    std::vector<std::vector<int>> adj;
};

// Matched (left, right) pairs, sorted by left index.
struct Matching {
    std::vector<std::pair<int, int>> pairs;
};

// Builds a graph from an edge list, sorting adjacency. Rejects out-of-range
// endpoints and duplicate edges.
BipartiteGraph validate_graph(int left_count, int right_count,
                              const std::vector<std::pair<int, int>>& edges);

// Hopcroft-Karp maximum matching. Deterministic: vertices and adjacency are
// scanned in ascending index order, so the result depends only on the graph.
Matching maximum_matching(const BipartiteGraph& g);

// True iff a maximum matching saturates every left vertex.
bool has_perfect_left_matching(const BipartiteGraph& g);

// Completes a partial agent->house matching to a full injection onto the
// given house set (strictly ascending, size == agent_count). Unmatched agents
// receive the remaining houses in ascending order.
Assignment extend_to_injection(int agent_count, const std::vector<int>& houses,
                               const Matching& partial);

namespace detail {

// Raw Hopcroft-Karp result: match_left[l] = right partner or -1, and the
// reverse map. Shared by the matching front end and the solvers.
struct MatchArrays {
    std::vector<int> match_left;
    std::vector<int> match_right;
    int size = 0;
};

MatchArrays hopcroft_karp(const BipartiteGraph& g);

}  // namespace detail

}  // namespace fairhouse

#endif
