#include "fairhouse/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

namespace fairhouse::oracles {

namespace {

// Falling factorial m * (m-1) * ... capped just past the enumeration limit;
// the running product stays below 2^63 because it is checked every step.
std::uint64_t injection_count(int n, int m) {
    std::uint64_t count = 1;
    for (int i = 0; i < n; ++i) {
        count *= static_cast<std::uint64_t>(m - i);
        if (count > kMaxEnumeration) return std::numeric_limits<std::uint64_t>::max();
    }
    return count;
}

void guard_injections(const Instance& inst) {
    require(injection_count(inst.n, inst.m) <= kMaxEnumeration, ErrorCode::TooLarge,
            "too many injections to enumerate");
}

// Enumerates all injections [n] -> [m] in lexicographic order of the
// assignment array and calls visit(phi) for each.
void for_each_injection(int n, int m, const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> phi(n, -1);
    std::vector<char> used(m, 0);
    std::function<void(int)> recurse = [&](int agent) {
        if (agent == n) {
            visit(phi);
            return;
        }
        for (int house = 0; house < m; ++house) {
            if (used[house]) continue;
            used[house] = 1;
            phi[agent] = house;
            recurse(agent + 1);
            used[house] = 0;
        }
    };
    recurse(0);
}

// Definitional evaluation, written out independently of the core predicates.
int ef_count_of(const Instance& inst, const std::vector<int>& phi) {
    int count = 0;
    for (int i = 0; i < inst.n; ++i) {
        Utility own = inst.utilities[i][phi[i]];
        bool envious = false;
        for (int j = 0; j < inst.n && !envious; ++j) {
            envious = inst.utilities[i][phi[j]] > own;
        }
        if (!envious) ++count;
    }
    return count;
}

int prop_count_of(const Instance& inst, const std::vector<int>& phi) {
    int count = 0;
    for (int i = 0; i < inst.n; ++i) {
        WideInt total = 0;
        for (int j = 0; j < inst.n; ++j) total += inst.utilities[i][phi[j]];
        if (static_cast<WideInt>(inst.n) * inst.utilities[i][phi[i]] >= total) ++count;
    }
    return count;
}

BruteMaxResult maximize(const Instance& inst,
                        const std::function<int(const std::vector<int>&)>& objective) {
    guard_injections(inst);
    BruteMaxResult best;
    best.count = -1;
    for_each_injection(inst.n, inst.m, [&](const std::vector<int>& phi) {
        int value = objective(phi);
        if (value > best.count) {
            best.count = value;
            best.assignment.house_of = phi;
        }
    });
    return best;
}

std::optional<Assignment> first_satisfying(
    const Instance& inst, const std::function<bool(const std::vector<int>&)>& predicate) {
    guard_injections(inst);
    std::optional<Assignment> found;
    for_each_injection(inst.n, inst.m, [&](const std::vector<int>& phi) {
        if (!found && predicate(phi)) found = Assignment{phi};
    });
    return found;
}

void for_each_combination(int total, int choose,
                          const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> chosen;
    chosen.reserve(choose);
    std::function<void(int)> recurse = [&](int start) {
        if (static_cast<int>(chosen.size()) == choose) {
            visit(chosen);
            return;
        }
        int remaining = choose - static_cast<int>(chosen.size());
        for (int next = start; next <= total - remaining; ++next) {
            chosen.push_back(next);
            recurse(next + 1);
            chosen.pop_back();
        }
    };
    recurse(0);
}

}  // namespace

BruteMaxResult brute_force_max_ef(const Instance& inst) {
    return maximize(inst, [&](const std::vector<int>& phi) { return ef_count_of(inst, phi); });
}

BruteMaxResult brute_force_max_prop(const Instance& inst) {
    return maximize(inst, [&](const std::vector<int>& phi) { return prop_count_of(inst, phi); });
}

std::optional<Assignment> brute_force_prop(const Instance& inst) {
    return first_satisfying(
        inst, [&](const std::vector<int>& phi) { return prop_count_of(inst, phi) == inst.n; });
}

std::optional<Assignment> brute_force_equitable(const Instance& inst) {
    return first_satisfying(inst, [&](const std::vector<int>& phi) {
        Utility first = inst.utilities[0][phi[0]];
        for (int i = 1; i < inst.n; ++i) {
            if (inst.utilities[i][phi[i]] != first) return false;
        }
        return true;
    });
}

BruteMinInequityResult brute_force_min_inequity(const Instance& inst) {
    guard_injections(inst);
    BruteMinInequityResult best;
    best.value = std::numeric_limits<Utility>::max();
    for_each_injection(inst.n, inst.m, [&](const std::vector<int>& phi) {
        Utility lo = inst.utilities[0][phi[0]];
        Utility hi = lo;
        for (int i = 1; i < inst.n; ++i) {
            Utility value = inst.utilities[i][phi[i]];
            lo = std::min(lo, value);
            hi = std::max(hi, value);
        }
        if (hi - lo < best.value) {
            best.value = hi - lo;
            best.assignment.house_of = phi;
        }
    });
    return best;
}

namespace {

constexpr int kMaxBicliqueSide = 12;

void guard_biclique_sides(const BipartiteGraph& g) {
    require(g.left_count <= kMaxBicliqueSide && g.right_count <= kMaxBicliqueSide,
            ErrorCode::TooLarge, "biclique oracle supports at most " +
                                     std::to_string(kMaxBicliqueSide) + " vertices per side");
}

std::vector<std::uint32_t> right_masks(const BipartiteGraph& g) {
    std::vector<std::uint32_t> masks(g.left_count, 0);
    for (int l = 0; l < g.left_count; ++l) {
        for (int r : g.adj[l]) masks[l] |= (1u << r);
    }
    return masks;
}

}  // namespace

int brute_force_opt_mbb(const BipartiteGraph& g) {
    guard_biclique_sides(g);
    std::vector<std::uint32_t> masks = right_masks(g);
    int best = 0;
    for (std::uint32_t subset = 1; subset < (1u << g.left_count); ++subset) {
        int size = std::popcount(subset);
        if (size <= best) continue;
        std::uint32_t common = ~0u;
        for (int l = 0; l < g.left_count; ++l) {
            if (subset & (1u << l)) common &= masks[l];
        }
        if (std::popcount(common) >= size) best = size;
    }
    return best;
}

Biclique brute_force_mbb_witness(const BipartiteGraph& g) {
    int opt = brute_force_opt_mbb(g);
    Biclique best;
    if (opt == 0) return best;
    std::vector<std::uint32_t> masks = right_masks(g);
    bool found = false;
    for_each_combination(g.left_count, opt, [&](const std::vector<int>& chosen) {
        if (found) return;
        std::uint32_t common = ~0u;
        for (int l : chosen) common &= masks[l];
        if (std::popcount(common) < opt) return;
        found = true;
        best.left = chosen;
        for (int r = 0; r < g.right_count && static_cast<int>(best.right.size()) < opt; ++r) {
            if (common & (1u << r)) best.right.push_back(r);
        }
    });
    require(found, ErrorCode::Internal, "witness enumeration missed the optimum");
    return best;
}

namespace {

constexpr int kMaxSubsetFamily = 20;

std::optional<std::vector<int>> min_coverage_search(const SetCoverageInstance& sc) {
    int d = static_cast<int>(sc.subsets.size());
    require(d <= kMaxSubsetFamily, ErrorCode::TooLarge,
            "coverage oracle supports at most " + std::to_string(kMaxSubsetFamily) + " subsets");
    std::optional<std::vector<int>> witness;
    std::vector<char> covered(sc.element_count, 0);
    for_each_combination(d, sc.ell, [&](const std::vector<int>& selection) {
        if (witness) return;
        std::fill(covered.begin(), covered.end(), 0);
        int union_size = 0;
        for (int t : selection) {
            for (int e : sc.subsets[t]) {
                if (!covered[e]) {
                    covered[e] = 1;
                    ++union_size;
                }
            }
        }
        if (union_size <= sc.q) witness = selection;
    });
    return witness;
}

}  // namespace

bool brute_force_min_coverage(const SetCoverageInstance& sc) {
    return min_coverage_search(sc).has_value();
}

std::optional<std::vector<int>> brute_force_min_coverage_witness(const SetCoverageInstance& sc) {
    return min_coverage_search(sc);
}

std::optional<std::vector<int>> brute_force_x3c(const X3CInstance& x) {
    int triple_count = static_cast<int>(x.triples.size());
    require(triple_count <= kMaxSubsetFamily, ErrorCode::TooLarge,
            "exact-cover oracle supports at most " + std::to_string(kMaxSubsetFamily) +
                " triples");
    int k = x.universe_size / 3;
    if (triple_count < k) return std::nullopt;
    std::optional<std::vector<int>> witness;
    std::vector<char> covered(x.universe_size, 0);
    for_each_combination(triple_count, k, [&](const std::vector<int>& selection) {
        if (witness) return;
        std::fill(covered.begin(), covered.end(), 0);
        for (int t : selection) {
            for (int v : x.triples[t]) {
                if (covered[v]) return;  // overlap: not an exact cover
                covered[v] = 1;
            }
        }
        // 3k = N and no overlap, so everything is covered.
        witness = selection;
    });
    return witness;
}

}  // namespace fairhouse::oracles
