#include "fairhouse/problems.hpp"

#include <algorithm>
#include <string>

namespace fairhouse {

SetCoverageInstance validate_set_coverage(int element_count,
                                          std::vector<std::vector<int>> subsets, int q, int ell) {
    require(element_count >= 1, ErrorCode::InvalidArgument, "element count must be at least 1");
    int d = static_cast<int>(subsets.size());
    require(d >= 1, ErrorCode::InvalidArgument, "need at least one subset");
    require(q >= 1 && q <= element_count, ErrorCode::InvalidArgument,
            "coverage bound q must satisfy 1 <= q <= |E|");
    require(ell >= 1 && ell <= d, ErrorCode::InvalidArgument,
            "selection size ell must satisfy 1 <= ell <= d");
    for (auto& subset : subsets) {
        std::sort(subset.begin(), subset.end());
        require(std::adjacent_find(subset.begin(), subset.end()) == subset.end(),
                ErrorCode::InvalidArgument, "subset members must be distinct");
        for (int e : subset) {
            require(e >= 0 && e < element_count, ErrorCode::IndexOutOfRange,
                    "subset member out of range: " + std::to_string(e));
        }
    }
    SetCoverageInstance sc;
    sc.element_count = element_count;
    sc.subsets = std::move(subsets);
    sc.q = q;
    sc.ell = ell;
    return sc;
}

X3CInstance validate_x3c(int universe_size, std::vector<std::array<int, 3>> triples) {
    require(universe_size >= 3, ErrorCode::InvalidArgument, "universe size must be at least 3");
    require(universe_size % 3 == 0, ErrorCode::InvalidArgument,
            "universe size must be a multiple of 3");
    for (auto& triple : triples) {
        std::sort(triple.begin(), triple.end());
        require(triple[0] != triple[1] && triple[1] != triple[2], ErrorCode::InvalidArgument,
                "triple members must be distinct");
        for (int v : triple) {
            require(v >= 0 && v < universe_size, ErrorCode::IndexOutOfRange,
                    "triple member out of range: " + std::to_string(v));
        }
    }
    X3CInstance x;
    x.universe_size = universe_size;
    x.triples = std::move(triples);
    return x;
}

void validate_biclique(const BipartiteGraph& g, const Biclique& biclique) {
    require(biclique.left.size() == biclique.right.size(), ErrorCode::InvalidBiclique,
            "biclique sides must have equal size");
    auto check_side = [](const std::vector<int>& side, int bound, const char* label) {
        require(std::is_sorted(side.begin(), side.end()) &&
                    std::adjacent_find(side.begin(), side.end()) == side.end(),
                ErrorCode::InvalidBiclique, std::string(label) + " side must be strictly ascending");
        for (int v : side) {
            require(v >= 0 && v < bound, ErrorCode::InvalidBiclique,
                    std::string(label) + " vertex out of range");
        }
    };
    check_side(biclique.left, g.left_count, "left");
    check_side(biclique.right, g.right_count, "right");
    for (int l : biclique.left) {
        for (int r : biclique.right) {
            require(std::binary_search(g.adj[l].begin(), g.adj[l].end(), r),
                    ErrorCode::InvalidBiclique,
                    "missing edge (" + std::to_string(l) + ", " + std::to_string(r) + ")");
        }
    }
}

}  // namespace fairhouse
