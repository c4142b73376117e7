#include "fairhouse/solvers.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace fairhouse {

namespace {

std::vector<Utility> distinct_utilities(const Instance& inst) {
    std::vector<Utility> values;
    values.reserve(static_cast<std::size_t>(inst.n) * inst.m);
    for (const auto& row : inst.utilities) values.insert(values.end(), row.begin(), row.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
}

// Binomial coefficient capped just past the subset limit.
std::uint64_t combination_count(int m, int n, std::uint64_t cap) {
    unsigned __int128 result = 1;
    for (int i = 1; i <= n; ++i) {
        result = result * static_cast<unsigned>(m - n + i) / static_cast<unsigned>(i);
        if (result > cap) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(result);
}

// Lexicographic enumeration of ascending n-subsets of [0, m); the visitor
// returns false to stop early.
void for_each_subset(int m, int n, const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> subset(n);
    for (int i = 0; i < n; ++i) subset[i] = i;
    while (true) {
        if (!visit(subset)) return;
        int i = n - 1;
        while (i >= 0 && subset[i] == m - n + i) --i;
        if (i < 0) return;
        ++subset[i];
        for (int j = i + 1; j < n; ++j) subset[j] = subset[j - 1] + 1;
    }
}

void guard_subset_enumeration(const Instance& inst, std::uint64_t limit) {
    require(combination_count(inst.m, inst.n, limit) <= limit,
            ErrorCode::InstanceTooLargeForExactSolve,
            "C(m, n) exceeds the exhaustive-solve limit of " + std::to_string(limit));
}

// Maximum number of "good" pairs achievable by an injection of the agents
// onto exactly the houses in `subset`, where good_edge says whether an agent
// is satisfied by a house. Equals the maximum matching size of the good-edge
// graph: satisfied agents always form such a matching, and any matching
// extends to a full injection.
int best_good_count(int n, const std::vector<int>& subset,
                    const std::function<bool(int, int)>& good_edge) {
    BipartiteGraph g;
    g.left_count = n;
    g.right_count = static_cast<int>(subset.size());
    g.adj.resize(n);
    for (int agent = 0; agent < n; ++agent) {
        for (int pos = 0; pos < g.right_count; ++pos) {
            if (good_edge(agent, subset[pos])) g.adj[agent].push_back(pos);
        }
    }
    return detail::hopcroft_karp(g).size;
}

// Lexicographically smallest injection onto `subset` with at least
// `required_good` satisfied agents. The caller guarantees achievability.
Assignment lex_min_assignment(int n, const std::vector<int>& subset,
                              const std::function<bool(int, int)>& good_edge, int required_good) {
    int width = static_cast<int>(subset.size());
    std::vector<char> used(width, 0);
    Assignment result;
    result.house_of.assign(n, -1);
    int good_fixed = 0;
    for (int agent = 0; agent < n; ++agent) {
        bool placed = false;
        for (int pos = 0; pos < width && !placed; ++pos) {
            if (used[pos]) continue;
            bool good_here = good_edge(agent, subset[pos]);
            // Best achievable over the remaining agents and houses.
            BipartiteGraph rest;
            rest.left_count = n - agent - 1;
            rest.right_count = width;
            rest.adj.resize(rest.left_count);
            for (int later = agent + 1; later < n; ++later) {
                for (int p = 0; p < width; ++p) {
                    if (p == pos || used[p]) continue;
                    if (good_edge(later, subset[p])) rest.adj[later - agent - 1].push_back(p);
                }
            }
            int attainable = good_fixed + (good_here ? 1 : 0) + detail::hopcroft_karp(rest).size;
            if (attainable >= required_good) {
                used[pos] = 1;
                result.house_of[agent] = subset[pos];
                good_fixed += good_here ? 1 : 0;
                placed = true;
            }
        }
        require(placed, ErrorCode::Internal, "lexicographic completion dead-ended");
    }
    return result;
}

std::vector<Utility> row_maxima_over(const Instance& inst, const std::vector<int>& subset) {
    std::vector<Utility> maxima(inst.n, 0);
    for (int agent = 0; agent < inst.n; ++agent) {
        Utility mx = 0;
        for (int house : subset) mx = std::max(mx, inst.utilities[agent][house]);
        maxima[agent] = mx;
    }
    return maxima;
}

std::vector<WideInt> row_totals_over(const Instance& inst, const std::vector<int>& subset) {
    std::vector<WideInt> totals(inst.n, 0);
    for (int agent = 0; agent < inst.n; ++agent) {
        WideInt total = 0;
        for (int house : subset) total += inst.utilities[agent][house];
        totals[agent] = total;
    }
    return totals;
}

struct SubsetScanWinner {
    int count = -1;
    std::vector<int> subset;
};

// Scans every n-subset and keeps the first one attaining the best count.
SubsetScanWinner scan_subsets_for_max(
    const Instance& inst,
    const std::function<std::function<bool(int, int)>(const std::vector<int>&)>& edge_maker) {
    SubsetScanWinner winner;
    for_each_subset(inst.m, inst.n, [&](const std::vector<int>& subset) {
        int count = best_good_count(inst.n, subset, edge_maker(subset));
        if (count > winner.count) {
            winner.count = count;
            winner.subset = subset;
        }
        return winner.count < inst.n;  // n satisfied agents cannot be beaten
    });
    return winner;
}

}  // namespace

std::optional<EquitableResult> equitable_exists(const Instance& inst) {
    for (Utility level : distinct_utilities(inst)) {
        BipartiteGraph g;
        g.left_count = inst.n;
        g.right_count = inst.m;
        g.adj.resize(inst.n);
        bool every_agent_has_edge = true;
        for (int agent = 0; agent < inst.n && every_agent_has_edge; ++agent) {
            for (int house = 0; house < inst.m; ++house) {
                if (inst.utilities[agent][house] == level) g.adj[agent].push_back(house);
            }
            every_agent_has_edge = !g.adj[agent].empty();
        }
        if (!every_agent_has_edge) continue;
        detail::MatchArrays arrays = detail::hopcroft_karp(g);
        if (arrays.size == inst.n) {
            EquitableResult result;
            result.level = level;
            result.assignment.house_of = std::move(arrays.match_left);
            return result;
        }
    }
    return std::nullopt;
}

std::optional<Assignment> ef_exists(const Instance& inst) {
    std::vector<char> available(inst.m, 1);
    int available_count = inst.m;
    while (available_count >= inst.n) {
        // Favorite graph: each agent joined to her maximum-utility houses
        // among the remaining set.
        BipartiteGraph g;
        g.left_count = inst.n;
        g.right_count = inst.m;
        g.adj.resize(inst.n);
        for (int agent = 0; agent < inst.n; ++agent) {
            Utility mx = 0;
            bool seen = false;
            for (int house = 0; house < inst.m; ++house) {
                if (!available[house]) continue;
                if (!seen || inst.utilities[agent][house] > mx) {
                    mx = inst.utilities[agent][house];
                    seen = true;
                }
            }
            for (int house = 0; house < inst.m; ++house) {
                if (available[house] && inst.utilities[agent][house] == mx)
                    g.adj[agent].push_back(house);
            }
        }
        detail::MatchArrays arrays = detail::hopcroft_karp(g);
        if (arrays.size == inst.n) {
            Assignment result;
            result.house_of = std::move(arrays.match_left);
            return result;
        }
        // Hall violator: agents alternately reachable from the unmatched
        // ones. Their favorite neighbourhood is over-demanded; no envy-free
        // assignment can allocate those houses, so drop them and retry.
        std::vector<char> agent_seen(inst.n, 0);
        std::vector<char> house_seen(inst.m, 0);
        std::vector<int> stack;
        for (int agent = 0; agent < inst.n; ++agent) {
            if (arrays.match_left[agent] == -1) {
                agent_seen[agent] = 1;
                stack.push_back(agent);
            }
        }
        int removed = 0;
        while (!stack.empty()) {
            int agent = stack.back();
            stack.pop_back();
            for (int house : g.adj[agent]) {
                if (house_seen[house]) continue;
                house_seen[house] = 1;
                available[house] = 0;
                ++removed;
                int owner = arrays.match_right[house];
                if (owner != -1 && !agent_seen[owner]) {
                    agent_seen[owner] = 1;
                    stack.push_back(owner);
                }
            }
        }
        require(removed > 0, ErrorCode::Internal, "favorite-graph elimination made no progress");
        available_count -= removed;
    }
    return std::nullopt;
}

MaxSolveResult max_envy_free(const Instance& inst, std::uint64_t subset_limit) {
    guard_subset_enumeration(inst, subset_limit);
    std::vector<Utility> maxima;
    auto edge_maker = [&](const std::vector<int>& subset) {
        maxima = row_maxima_over(inst, subset);
        return std::function<bool(int, int)>([&](int agent, int house) {
            return inst.utilities[agent][house] == maxima[agent];
        });
    };
    SubsetScanWinner winner = scan_subsets_for_max(inst, edge_maker);
    MaxSolveResult result;
    result.count = winner.count;
    std::vector<Utility> winner_maxima = row_maxima_over(inst, winner.subset);
    result.assignment = lex_min_assignment(
        inst.n, winner.subset,
        [&](int agent, int house) { return inst.utilities[agent][house] == winner_maxima[agent]; },
        winner.count);
    return result;
}

MaxSolveResult max_proportional(const Instance& inst, std::uint64_t subset_limit) {
    guard_subset_enumeration(inst, subset_limit);
    std::vector<WideInt> totals;
    auto edge_maker = [&](const std::vector<int>& subset) {
        totals = row_totals_over(inst, subset);
        return std::function<bool(int, int)>([&](int agent, int house) {
            return static_cast<WideInt>(inst.n) * inst.utilities[agent][house] >= totals[agent];
        });
    };
    SubsetScanWinner winner = scan_subsets_for_max(inst, edge_maker);
    MaxSolveResult result;
    result.count = winner.count;
    std::vector<WideInt> winner_totals = row_totals_over(inst, winner.subset);
    result.assignment = lex_min_assignment(
        inst.n, winner.subset,
        [&](int agent, int house) {
            return static_cast<WideInt>(inst.n) * inst.utilities[agent][house] >=
                   winner_totals[agent];
        },
        winner.count);
    return result;
}

std::optional<Assignment> prop_exists(const Instance& inst, std::uint64_t subset_limit) {
    guard_subset_enumeration(inst, subset_limit);
    std::optional<std::vector<int>> winner;
    for_each_subset(inst.m, inst.n, [&](const std::vector<int>& subset) {
        std::vector<WideInt> totals = row_totals_over(inst, subset);
        auto good = [&](int agent, int house) {
            return static_cast<WideInt>(inst.n) * inst.utilities[agent][house] >= totals[agent];
        };
        // Cheap necessary condition before running the matching.
        for (int agent = 0; agent < inst.n; ++agent) {
            bool any = false;
            for (int house : subset) {
                if (good(agent, house)) {
                    any = true;
                    break;
                }
            }
            if (!any) return true;
        }
        if (best_good_count(inst.n, subset, good) == inst.n) {
            winner = subset;
            return false;
        }
        return true;
    });
    if (!winner) return std::nullopt;
    std::vector<WideInt> totals = row_totals_over(inst, *winner);
    return lex_min_assignment(
        inst.n, *winner,
        [&](int agent, int house) {
            return static_cast<WideInt>(inst.n) * inst.utilities[agent][house] >= totals[agent];
        },
        inst.n);
}

std::optional<Assignment> prop_exists_all_houses(const Instance& inst) {
    std::vector<int> all_houses(inst.m);
    for (int house = 0; house < inst.m; ++house) all_houses[house] = house;
    std::vector<WideInt> totals = row_totals_over(inst, all_houses);
    BipartiteGraph g;
    g.left_count = inst.n;
    g.right_count = inst.m;
    g.adj.resize(inst.n);
    for (int agent = 0; agent < inst.n; ++agent) {
        for (int house = 0; house < inst.m; ++house) {
            if (static_cast<WideInt>(inst.n) * inst.utilities[agent][house] >= totals[agent])
                g.adj[agent].push_back(house);
        }
    }
    detail::MatchArrays arrays = detail::hopcroft_karp(g);
    if (arrays.size != inst.n) return std::nullopt;
    Assignment result;
    result.house_of = std::move(arrays.match_left);
    return result;
}

MinInequityResult min_inequity(const Instance& inst) {
    std::vector<Utility> values = distinct_utilities(inst);
    int value_count = static_cast<int>(values.size());

    auto band_graph = [&](Utility lo, Utility hi) {
        BipartiteGraph g;
        g.left_count = inst.n;
        g.right_count = inst.m;
        g.adj.resize(inst.n);
        for (int agent = 0; agent < inst.n; ++agent) {
            for (int house = 0; house < inst.m; ++house) {
                Utility value = inst.utilities[agent][house];
                if (value >= lo && value <= hi) g.adj[agent].push_back(house);
            }
        }
        return g;
    };
    auto feasible = [&](int a, int b) {
        return detail::hopcroft_karp(band_graph(values[a], values[b])).size == inst.n;
    };

    // For fixed lo the feasible hi values form an up-set, and the minimal
    // feasible hi is nondecreasing in lo, so a two-pointer sweep visits every
    // candidate optimum. Scanning lo in ascending order makes the first
    // strict improvement the smallest-lo tie-break winner.
    int best_a = -1;
    int best_b = -1;
    Utility best_diff = std::numeric_limits<Utility>::max();
    int b = 0;
    for (int a = 0; a < value_count; ++a) {
        if (b < a) b = a;
        while (b < value_count && !feasible(a, b)) ++b;
        if (b == value_count) break;  // larger lo cannot become feasible again
        if (values[b] - values[a] < best_diff) {
            best_diff = values[b] - values[a];
            best_a = a;
            best_b = b;
        }
        if (best_diff == 0) break;
    }
    require(best_a >= 0, ErrorCode::Internal, "no feasible value band found");

    detail::MatchArrays arrays = detail::hopcroft_karp(band_graph(values[best_a], values[best_b]));
    MinInequityResult result;
    result.assignment.house_of = std::move(arrays.match_left);
    result.value = inequity(inst, result.assignment);
    require(result.value == best_diff, ErrorCode::Internal,
            "band assignment does not attain the computed inequity");
    return result;
}

}  // namespace fairhouse
