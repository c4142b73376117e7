#include "fairhouse/reductions.hpp"

#include <algorithm>
#include <string>

namespace fairhouse {

namespace {

bool has_edge(const BipartiteGraph& g, int l, int r) {
    return std::binary_search(g.adj[l].begin(), g.adj[l].end(), r);
}

}  // namespace

Instance mbb_to_maxef(const BipartiteGraph& g) {
    require(g.left_count >= 1, ErrorCode::InvalidArgument,
            "reduction needs at least one left vertex");
    int left = g.left_count;
    int right = g.right_count;
    std::vector<std::vector<Utility>> utilities(left, std::vector<Utility>(right + left, 0));
    for (int i = 0; i < left; ++i) {
        for (int j = 0; j < right; ++j) {
            utilities[i][j] = has_edge(g, i, j) ? left : left + (j + 1);
        }
        for (int j = 0; j < left; ++j) {
            utilities[i][right + j] = j;  // padding house j+1 is worth j
        }
    }
    return validate_instance(left, right + left, std::move(utilities));
}

Assignment ef_assignment_from_biclique(const BipartiteGraph& g, const Biclique& biclique) {
    require(g.left_count >= 1, ErrorCode::InvalidArgument,
            "reduction needs at least one left vertex");
    validate_biclique(g, biclique);
    Assignment phi;
    phi.house_of.resize(g.left_count);
    for (int i = 0; i < g.left_count; ++i) phi.house_of[i] = g.right_count + i;
    for (int l = 0; l < biclique.size(); ++l) {
        phi.house_of[biclique.left[l]] = biclique.right[l];
    }
    return phi;
}

Biclique biclique_from_assignment(const BipartiteGraph& g, const Assignment& phi, int k) {
    Instance inst = mbb_to_maxef(g);
    validate_assignment(inst, phi);
    require(k >= 0, ErrorCode::InvalidArgument, "k must be non-negative");
    require(count_envy_free(inst, phi) >= k, ErrorCode::PreconditionViolated,
            "assignment has fewer than k envy-free agents");
    Biclique result;
    if (k <= 1) return result;

    // With at least two envy-free agents, none of them can hold a padding
    // house, so each envy-free agent pairs with a graph house.
    std::vector<std::pair<int, int>> house_agent;  // (house, agent), houses ascending
    for (int agent = 0; agent < inst.n; ++agent) {
        if (phi.house_of[agent] < g.right_count && agent_is_envy_free(inst, phi, agent)) {
            house_agent.emplace_back(phi.house_of[agent], agent);
        }
    }
    require(static_cast<int>(house_agent.size()) >= k, ErrorCode::Internal,
            "envy-free agents on graph houses fewer than k");
    std::sort(house_agent.begin(), house_agent.end());
    house_agent.resize(k);  // the k smallest assigned house indices

    int half = k / 2;
    for (int l = 0; l < half; ++l) result.left.push_back(house_agent[l].second);
    for (int l = k - half; l < k; ++l) result.right.push_back(house_agent[l].first);
    std::sort(result.left.begin(), result.left.end());

    try {
        validate_biclique(g, result);
    } catch (const Error& e) {
        fail(ErrorCode::Internal, std::string("extracted biclique failed verification: ") +
                                      e.what());
    }
    return result;
}

Biclique largest_biclique_up_to(const BipartiteGraph& g, int cap) {
    int max_side = std::min({cap, g.left_count, g.right_count});
    std::vector<int> chosen;
    std::vector<int> common;
    std::vector<int> merged;
    Biclique found;
    // Left subsets of size p in lexicographic order, pruning branches whose
    // common neighbourhood is already too small.
    std::function<bool(int, int)> search = [&](int start, int target) {
        int picked = static_cast<int>(chosen.size());
        if (picked == target) {
            found.left = chosen;
            found.right.assign(common.begin(), common.begin() + target);
            return true;
        }
        for (int next = start; next <= g.left_count - (target - picked); ++next) {
            merged.clear();
            if (picked == 0) {
                merged = g.adj[next];
            } else {
                std::set_intersection(common.begin(), common.end(), g.adj[next].begin(),
                                      g.adj[next].end(), std::back_inserter(merged));
            }
            if (static_cast<int>(merged.size()) < target) continue;
            std::vector<int> saved = common;
            common = merged;
            chosen.push_back(next);
            if (search(next + 1, target)) return true;
            chosen.pop_back();
            common = std::move(saved);
        }
        return false;
    };
    for (int p = max_side; p >= 1; --p) {
        chosen.clear();
        common.clear();
        if (search(0, p)) return found;
    }
    return {};
}

Biclique mbb_approx_via_maxef(const BipartiteGraph& g, const MaxEfProcedure& inner,
                              Rational epsilon) {
    require(epsilon.num >= 1 && epsilon.den >= 1, ErrorCode::InvalidArgument,
            "epsilon must be a positive rational");
    // beta = 2 * (1/eps + 1) = 2 * (den + num) / num, rounded up.
    std::int64_t beta_ceil = (2 * (epsilon.num + epsilon.den) + epsilon.num - 1) / epsilon.num;

    Instance inst = mbb_to_maxef(g);
    auto [phi, val] = inner(inst);
    Biclique extracted = biclique_from_assignment(g, phi, val);
    Biclique brute = largest_biclique_up_to(g, static_cast<int>(beta_ceil));
    return brute.size() >= extracted.size() ? brute : extracted;
}

MinCovReduction mincov_to_binary_ef(const SetCoverageInstance& sc) {
    int elements = sc.element_count;
    int d = static_cast<int>(sc.subsets.size());
    int n = elements + d;
    int m = d + (elements + d - sc.ell);
    std::vector<std::vector<Utility>> utilities(n, std::vector<Utility>(m, 0));
    for (int t = 0; t < d; ++t) {
        for (int e : sc.subsets[t]) utilities[e][t] = 1;  // element agents want covering houses
        utilities[elements + t][t] = 1;                   // each subset agent wants her own house
    }
    MinCovReduction reduction;
    reduction.instance = validate_instance(n, m, std::move(utilities));
    reduction.k = elements + d - sc.q;
    return reduction;
}

Assignment ef_assignment_from_cover(const SetCoverageInstance& sc,
                                    const std::vector<int>& selection) {
    int elements = sc.element_count;
    int d = static_cast<int>(sc.subsets.size());
    require(static_cast<int>(selection.size()) == sc.ell, ErrorCode::InfeasibleSelection,
            "selection must contain exactly ell subset indices");
    std::vector<char> selected(d, 0);
    for (int t : selection) {
        require(t >= 0 && t < d, ErrorCode::IndexOutOfRange, "subset index out of range");
        require(!selected[t], ErrorCode::InfeasibleSelection, "selection contains a duplicate");
        selected[t] = 1;
    }
    std::vector<char> covered(elements, 0);
    int union_size = 0;
    for (int t : selection) {
        for (int e : sc.subsets[t]) {
            if (!covered[e]) {
                covered[e] = 1;
                ++union_size;
            }
        }
    }
    require(union_size <= sc.q, ErrorCode::InfeasibleSelection,
            "selection covers more than q elements");

    int n = elements + d;
    Assignment phi;
    phi.house_of.assign(n, -1);
    for (int t = 0; t < d; ++t) {
        if (selected[t]) phi.house_of[elements + t] = t;
    }
    // Everyone else takes the plain houses in ascending order.
    int next_plain = d;
    for (int agent = 0; agent < n; ++agent) {
        if (phi.house_of[agent] == -1) phi.house_of[agent] = next_plain++;
    }
    return phi;
}

namespace {

struct ReducedShape {
    int element_count = 0;
    int d = 0;
    int ell = 0;
};

// Recovers (|E|, d, ell) from a reduced instance's structure: the trailing d
// rows are unit vectors on the first d columns, element rows are supported on
// those columns only, and m - n fixes d - ell.
ReducedShape infer_reduced_shape(const Instance& inst) {
    require(is_binary(inst), ErrorCode::NotAReducedInstance, "instance is not binary");
    const auto& last_row = inst.utilities[inst.n - 1];
    int one_column = -1;
    for (int house = 0; house < inst.m; ++house) {
        if (last_row[house] == 1) {
            require(one_column == -1, ErrorCode::NotAReducedInstance,
                    "last agent row is not a unit vector");
            one_column = house;
        }
    }
    require(one_column != -1, ErrorCode::NotAReducedInstance, "last agent row is all zero");
    ReducedShape shape;
    shape.d = one_column + 1;
    shape.element_count = inst.n - shape.d;
    shape.ell = shape.d - (inst.m - inst.n);
    require(shape.element_count >= 1, ErrorCode::NotAReducedInstance,
            "no element agents in front of the subset agents");
    require(shape.ell >= 1 && shape.ell <= shape.d, ErrorCode::NotAReducedInstance,
            "house count does not match any ell in [1, d]");
    for (int t = 0; t < shape.d; ++t) {
        const auto& row = inst.utilities[shape.element_count + t];
        for (int house = 0; house < inst.m; ++house) {
            require(row[house] == (house == t ? 1 : 0), ErrorCode::NotAReducedInstance,
                    "subset agent row " + std::to_string(t) + " is not the expected unit vector");
        }
    }
    for (int e = 0; e < shape.element_count; ++e) {
        for (int house = shape.d; house < inst.m; ++house) {
            require(inst.utilities[e][house] == 0, ErrorCode::NotAReducedInstance,
                    "element agent values a plain house");
        }
    }
    return shape;
}

}  // namespace

Assignment normalize_assignment(const Instance& inst, const Assignment& phi) {
    ReducedShape shape = infer_reduced_shape(inst);
    validate_assignment(inst, phi);
    Assignment sigma = phi;
    std::vector<int> owner(inst.m, -1);
    for (int agent = 0; agent < inst.n; ++agent) owner[sigma.house_of[agent]] = agent;

    // Whenever subset house t is held by anyone but subset agent t, swapping
    // the two houses makes agent t envy-free without hurting anyone else.
    // Each swap pins one subset house for good, so d passes suffice.
    for (int swaps = 0; swaps <= shape.d; ++swaps) {
        int t = -1;
        for (int candidate = 0; candidate < shape.d; ++candidate) {
            int holder = owner[candidate];
            if (holder != -1 && holder != shape.element_count + candidate) {
                t = candidate;
                break;
            }
        }
        if (t == -1) return sigma;
        int star_agent = shape.element_count + t;
        int displaced = owner[t];
        int star_agents_old_house = sigma.house_of[star_agent];
        sigma.house_of[star_agent] = t;
        sigma.house_of[displaced] = star_agents_old_house;
        owner[t] = star_agent;
        owner[star_agents_old_house] = displaced;
    }
    fail(ErrorCode::Internal, "normalization did not settle within d swaps");
}

std::vector<int> cover_from_ef_assignment(const SetCoverageInstance& sc, const Assignment& phi) {
    MinCovReduction reduction = mincov_to_binary_ef(sc);
    const Instance& inst = reduction.instance;
    validate_assignment(inst, phi);
    require(count_envy_free(inst, phi) >= reduction.k, ErrorCode::PreconditionViolated,
            "assignment has fewer than k envy-free agents");
    Assignment sigma = normalize_assignment(inst, phi);

    int d = static_cast<int>(sc.subsets.size());
    std::vector<int> selection;
    for (int t = 0; t < d; ++t) {
        if (sigma.house_of[sc.element_count + t] == t) selection.push_back(t);
    }
    require(static_cast<int>(selection.size()) >= sc.ell, ErrorCode::Internal,
            "normalized assignment selects fewer than ell subsets");
    selection.resize(sc.ell);  // drop the largest indices; the union only shrinks

    std::vector<char> covered(sc.element_count, 0);
    int union_size = 0;
    for (int t : selection) {
        for (int e : sc.subsets[t]) {
            if (!covered[e]) {
                covered[e] = 1;
                ++union_size;
            }
        }
    }
    require(union_size <= sc.q, ErrorCode::Internal,
            "extracted selection covers more than q elements");
    return selection;
}

namespace {

struct X3CParams {
    std::int64_t big_t = 0;
    std::int64_t c = 0;
};

X3CParams x3c_params(const X3CInstance& x, std::optional<std::int64_t> t_override) {
    std::int64_t n = x.universe_size;
    std::int64_t m = static_cast<std::int64_t>(x.triples.size());
    X3CParams params;
    params.big_t = t_override.value_or(100 * (m + n));
    if (t_override) {
        require(n + params.big_t > 3 * m && 2 * (params.big_t + n) > 19,
                ErrorCode::InvalidOverride,
                "override must keep N + T > 3M and 2(T + N) > 19");
    }
    params.c = 8 * params.big_t + 8 * n - 19;
    return params;
}

}  // namespace

Instance x3c_to_prop(const X3CInstance& x, std::optional<std::int64_t> t_override) {
    X3CParams params = x3c_params(x, t_override);
    int universe = x.universe_size;
    int triples = static_cast<int>(x.triples.size());
    std::int64_t agent_count = universe + params.big_t;
    std::int64_t house_count = 3LL * triples + params.big_t;
    require(static_cast<std::uint64_t>(agent_count) * static_cast<std::uint64_t>(house_count) <=
                kMaxInstanceCells,
            ErrorCode::TooLarge, "reduced instance exceeds the cell limit");

    int n = static_cast<int>(agent_count);
    int m = static_cast<int>(house_count);
    std::vector<std::vector<Utility>> utilities(n, std::vector<Utility>(m, 0));
    for (int j = 0; j < triples; ++j) {
        for (int p = 0; p < 3; ++p) {
            int element = x.triples[j][p];
            // Houses of triple j, seen from the agent sitting at position p.
            utilities[element][3 * j + p] = 8 * params.big_t;
            utilities[element][3 * j + (p + 2) % 3] = 6 * params.big_t - (j + 1);
            utilities[element][3 * j + (p + 1) % 3] = 5 * params.big_t + (j + 1);
        }
    }
    for (int i = 0; i < universe; ++i) {
        for (int j = 0; j < params.big_t; ++j) utilities[i][3 * triples + j] = params.c;
    }
    for (int i = 0; i < params.big_t; ++i) {
        for (int j = 0; j < params.big_t; ++j) utilities[universe + i][3 * triples + j] = 1;
    }
    return validate_instance(n, m, std::move(utilities));
}

Assignment prop_assignment_from_cover(const X3CInstance& x, const std::vector<int>& cover,
                                      std::optional<std::int64_t> t_override) {
    X3CParams params = x3c_params(x, t_override);
    int universe = x.universe_size;
    int triples = static_cast<int>(x.triples.size());
    require(static_cast<std::uint64_t>(universe + params.big_t) *
                    static_cast<std::uint64_t>(3LL * triples + params.big_t) <=
                kMaxInstanceCells,
            ErrorCode::TooLarge, "reduced instance exceeds the cell limit");
    int k = universe / 3;
    require(static_cast<int>(cover.size()) == k, ErrorCode::NotAnExactCover,
            "cover must contain exactly N/3 triples");
    // position_of[v] = (triple, slot) within the cover; every element exactly once.
    std::vector<std::pair<int, int>> position_of(universe, {-1, -1});
    for (int j : cover) {
        require(j >= 0 && j < triples, ErrorCode::IndexOutOfRange, "triple index out of range");
        for (int p = 0; p < 3; ++p) {
            int element = x.triples[j][p];
            require(position_of[element].first == -1, ErrorCode::NotAnExactCover,
                    "element " + std::to_string(element) + " covered twice");
            position_of[element] = {j, p};
        }
    }
    for (int v = 0; v < universe; ++v) {
        require(position_of[v].first != -1, ErrorCode::NotAnExactCover,
                "element " + std::to_string(v) + " is not covered");
    }
    Assignment phi;
    phi.house_of.resize(universe + params.big_t);
    for (int v = 0; v < universe; ++v) {
        phi.house_of[v] = 3 * position_of[v].first + position_of[v].second;
    }
    for (int i = 0; i < static_cast<int>(params.big_t); ++i) {
        phi.house_of[universe + i] = 3 * triples + i;
    }
    return phi;
}

std::vector<int> cover_from_prop_assignment(const X3CInstance& x, const Assignment& phi,
                                            std::optional<std::int64_t> t_override) {
    Instance inst = x3c_to_prop(x, t_override);
    validate_assignment(inst, phi);
    for (int agent = 0; agent < inst.n; ++agent) {
        require(agent_is_proportional(inst, phi, agent), ErrorCode::PreconditionViolated,
                "assignment is not proportional for agent " + std::to_string(agent));
    }
    int universe = x.universe_size;
    int triples = static_cast<int>(x.triples.size());
    std::vector<int> slots_held(triples, 0);
    for (int v = 0; v < universe; ++v) {
        int house = phi.house_of[v];
        require(house < 3 * triples, ErrorCode::MalformedQ,
                "element agent holds a dummy house, contradicting the reduction");
        ++slots_held[house / 3];
    }
    std::vector<int> cover;
    for (int j = 0; j < triples; ++j) {
        require(slots_held[j] == 0 || slots_held[j] == 3, ErrorCode::MalformedQ,
                "houses of triple " + std::to_string(j) + " are only partially assigned");
        if (slots_held[j] == 3) cover.push_back(j);
    }
    std::vector<char> covered(universe, 0);
    for (int j : cover) {
        for (int v : x.triples[j]) {
            require(!covered[v], ErrorCode::MalformedQ, "extracted triples overlap");
            covered[v] = 1;
        }
    }
    for (int v = 0; v < universe; ++v) {
        require(covered[v], ErrorCode::MalformedQ, "extracted triples miss an element");
    }
    return cover;
}

}  // namespace fairhouse
