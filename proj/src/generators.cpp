#include "fairhouse/generators.hpp"

#include <algorithm>
#include <set>

#include "fairhouse/rng.hpp"

namespace fairhouse {

Instance gen_instance(int n, int m, Utility max_utility, std::uint64_t seed) {
    require(max_utility >= 0 && max_utility <= kMaxUtility, ErrorCode::InvalidArgument,
            "max utility out of range");
    Rng rng(seed);
    std::vector<std::vector<Utility>> utilities(n >= 0 ? n : 0);
    for (auto& row : utilities) {
        row.resize(m >= 0 ? m : 0);
        for (auto& value : row) {
            value = static_cast<Utility>(rng.below(static_cast<std::uint64_t>(max_utility) + 1));
        }
    }
    return validate_instance(n, m, std::move(utilities));
}

Instance gen_binary_instance(int n, int m, std::uint64_t seed) {
    return gen_instance(n, m, 1, seed);
}

BipartiteGraph gen_bipartite(int left, int right, std::uint64_t edge_millionths,
                             std::uint64_t seed) {
    require(left >= 1 && right >= 1, ErrorCode::InvalidArgument,
            "vertex counts must be positive");
    require(edge_millionths <= 1'000'000, ErrorCode::InvalidArgument,
            "edge probability above 1");
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int l = 0; l < left; ++l) {
        for (int r = 0; r < right; ++r) {
            if (rng.chance(edge_millionths)) edges.emplace_back(l, r);
        }
    }
    return validate_graph(left, right, edges);
}

X3CInstance gen_x3c(int universe_size, int triple_count, std::uint64_t seed) {
    require(universe_size >= 3 && universe_size % 3 == 0, ErrorCode::InvalidArgument,
            "universe size must be a positive multiple of 3");
    require(triple_count >= 0, ErrorCode::InvalidArgument, "triple count must be non-negative");
    std::uint64_t n = static_cast<std::uint64_t>(universe_size);
    std::uint64_t distinct_triples = n * (n - 1) * (n - 2) / 6;
    require(static_cast<std::uint64_t>(triple_count) <= distinct_triples,
            ErrorCode::InvalidArgument, "more triples requested than exist");

    Rng rng(seed);
    std::set<std::array<int, 3>> seen;
    std::vector<std::array<int, 3>> triples;
    while (triples.size() < static_cast<std::size_t>(triple_count)) {
        std::array<int, 3> triple;
        triple[0] = static_cast<int>(rng.below(n));
        do {
            triple[1] = static_cast<int>(rng.below(n));
        } while (triple[1] == triple[0]);
        do {
            triple[2] = static_cast<int>(rng.below(n));
        } while (triple[2] == triple[0] || triple[2] == triple[1]);
        std::sort(triple.begin(), triple.end());
        if (seen.insert(triple).second) triples.push_back(triple);
    }
    return validate_x3c(universe_size, std::move(triples));
}

SetCoverageInstance gen_min_coverage(int element_count, int subset_count, int q, int ell,
                                     std::uint64_t member_millionths, std::uint64_t seed) {
    require(member_millionths <= 1'000'000, ErrorCode::InvalidArgument,
            "membership probability above 1");
    Rng rng(seed);
    std::vector<std::vector<int>> subsets(subset_count >= 0 ? subset_count : 0);
    for (auto& subset : subsets) {
        for (int e = 0; e < element_count; ++e) {
            if (rng.chance(member_millionths)) subset.push_back(e);
        }
    }
    return validate_set_coverage(element_count, std::move(subsets), q, ell);
}

}  // namespace fairhouse
