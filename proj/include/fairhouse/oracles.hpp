#ifndef FAIRHOUSE_ORACLES_HPP
#define FAIRHOUSE_ORACLES_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fairhouse/problems.hpp"

// Exhaustive reference implementations used to validate the solvers and both
// directions of every reduction. They enumerate injections / subsets directly
// and evaluate the fairness definitions inline, sharing no search code with
// the solver module. All are deterministic: enumeration is in lexicographic
// order and the first optimum found is returned.
namespace fairhouse::oracles {

// Hard ceiling on the number of injections (respectively subsets) an oracle
// will enumerate; beyond it a TooLarge error is raised.
inline constexpr std::uint64_t kMaxEnumeration = 10'000'000ULL;

struct BruteMaxResult {
    Assignment assignment;
    int count = 0;
};

struct BruteMinInequityResult {
    Assignment assignment;
    Utility value = 0;
};

// Maximum of val(phi) over all injections; lexicographically smallest argmax.
BruteMaxResult brute_force_max_ef(const Instance& inst);

// Maximum number of proportional agents over all injections.
BruteMaxResult brute_force_max_prop(const Instance& inst);

// First injection (lexicographic order) where all agents are proportional.
std::optional<Assignment> brute_force_prop(const Instance& inst);

// First injection where all received utilities are equal.
std::optional<Assignment> brute_force_equitable(const Instance& inst);

BruteMinInequityResult brute_force_min_inequity(const Instance& inst);

// Largest p such that K_{p,p} is a subgraph; sides must have at most 12
// vertices each.
int brute_force_opt_mbb(const BipartiteGraph& g);

// A concrete maximum balanced biclique (lexicographically first witness).
Biclique brute_force_mbb_witness(const BipartiteGraph& g);

// Minimum Coverage decision: is there a selection of exactly ell subsets
// whose union has at most q elements?
bool brute_force_min_coverage(const SetCoverageInstance& sc);

// Witness selection for YES instances (first in lexicographic order).
std::optional<std::vector<int>> brute_force_min_coverage_witness(const SetCoverageInstance& sc);

// Exact cover by triples (indices, ascending) or nullopt.
std::optional<std::vector<int>> brute_force_x3c(const X3CInstance& x);

}  // namespace fairhouse::oracles

#endif
