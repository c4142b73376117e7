#ifndef FAIRHOUSE_PROBLEMS_HPP
#define FAIRHOUSE_PROBLEMS_HPP

#include <array>
#include <vector>

#include "fairhouse/matching.hpp"

namespace fairhouse {

// Minimum Coverage input: pick exactly `ell` of the subsets so that their
// union has at most `q` elements.
struct SetCoverageInstance {
    int element_count = 0;
    std::vector<std::vector<int>> subsets;
    int q = 0;
    int ell = 0;
};

// Exact 3-Set Cover input: universe of size N (a multiple of 3) and size-3
// subsets; the target cover size is N/3.
struct X3CInstance {
    int universe_size = 0;
    std::vector<std::array<int, 3>> triples;
};

// Balanced complete bipartite subgraph: |left| == |right| and every
// left x right pair is an edge of the source graph. Both sides sorted.
struct Biclique {
    std::vector<int> left;
    std::vector<int> right;

    int size() const { return static_cast<int>(left.size()); }
};

SetCoverageInstance validate_set_coverage(int element_count,
                                          std::vector<std::vector<int>> subsets, int q, int ell);

X3CInstance validate_x3c(int universe_size, std::vector<std::array<int, 3>> triples);

// Checks membership, balance, and that every cross pair is an edge of g.
void validate_biclique(const BipartiteGraph& g, const Biclique& biclique);

}  // namespace fairhouse

#endif
