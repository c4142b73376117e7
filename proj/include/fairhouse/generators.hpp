#ifndef FAIRHOUSE_GENERATORS_HPP
#define FAIRHOUSE_GENERATORS_HPP

#include <cstdint>

#include "fairhouse/problems.hpp"

namespace fairhouse {

// Seeded random fixtures. All generators are deterministic functions of
// their parameters and the seed.

Instance gen_instance(int n, int m, Utility max_utility, std::uint64_t seed);

Instance gen_binary_instance(int n, int m, std::uint64_t seed);

// Each of the left*right edges is present with probability
// edge_millionths / 1e6.
BipartiteGraph gen_bipartite(int left, int right, std::uint64_t edge_millionths,
                             std::uint64_t seed);

// M pairwise-distinct triples over a universe of size N (N divisible by 3).
X3CInstance gen_x3c(int universe_size, int triple_count, std::uint64_t seed);

// d subsets over |E| elements with independent membership probability
// member_millionths / 1e6, plus the given bounds q and ell.
SetCoverageInstance gen_min_coverage(int element_count, int subset_count, int q, int ell,
                                     std::uint64_t member_millionths, std::uint64_t seed);

}  // namespace fairhouse

#endif
