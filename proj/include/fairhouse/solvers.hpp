#ifndef FAIRHOUSE_SOLVERS_HPP
#define FAIRHOUSE_SOLVERS_HPP

#include <cstdint>
#include <optional>

#include "fairhouse/matching.hpp"

namespace fairhouse {

// Default ceiling on the number of house subsets the exhaustive solvers may
// enumerate (the problems they solve exactly are NP-hard).
inline constexpr std::uint64_t kDefaultSubsetLimit = 10'000'000ULL;

struct EquitableResult {
    Assignment assignment;
    Utility level = 0;
};

struct MaxSolveResult {
    Assignment assignment;
    int count = 0;
};

struct MinInequityResult {
    Assignment assignment;
    Utility value = 0;
};

// Polynomial: sweeps the distinct utility values in ascending order and looks
// for a perfect matching in the equality graph of each value. Returns the
// first level that admits one.
std::optional<EquitableResult> equitable_exists(const Instance& inst);

// Polynomial: iterated favorite-graph matching. Matches agents to their
// maximum-utility houses among the remaining house set; when the matching is
// not perfect, removes the over-demanded houses found through a Hall-violator
// analysis and retries. Returns an assignment with val(phi) = n iff one
// exists.
std::optional<Assignment> ef_exists(const Instance& inst);

// Exact maximization of the number of envy-free agents by enumerating every
// n-subset of houses (an agent is envy-free iff she receives a house
// attaining her maximum utility over the assigned set). Ties break to the
// lexicographically smallest subset, then the lexicographically smallest
// assignment. Throws InstanceTooLargeForExactSolve when C(m, n) exceeds the
// limit.
MaxSolveResult max_envy_free(const Instance& inst,
                             std::uint64_t subset_limit = kDefaultSubsetLimit);

// Exact decision for proportionality: enumerates n-subsets; for an assigned
// set S, agent a's threshold is her total utility over S and she is
// proportional iff n * u_a(house) >= threshold. Same guard and tie-breaking
// as max_envy_free.
std::optional<Assignment> prop_exists(const Instance& inst,
                                      std::uint64_t subset_limit = kDefaultSubsetLimit);

// Exact maximization of the number of proportional agents.
MaxSolveResult max_proportional(const Instance& inst,
                                std::uint64_t subset_limit = kDefaultSubsetLimit);

// Polynomial variant where each agent's threshold is her utility for the set
// of all m houses: one matching on the threshold graph decides existence.
std::optional<Assignment> prop_exists_all_houses(const Instance& inst);

// Polynomial: for value pairs (lo, hi), lo <= hi, tests a perfect matching in
// the graph of houses valued within [lo, hi]; minimizes hi - lo with ties
// broken toward the smallest lo.
MinInequityResult min_inequity(const Instance& inst);

}  // namespace fairhouse

#endif
