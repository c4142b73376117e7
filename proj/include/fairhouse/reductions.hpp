#ifndef FAIRHOUSE_REDUCTIONS_HPP
#define FAIRHOUSE_REDUCTIONS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>

#include "fairhouse/problems.hpp"

namespace fairhouse {

// Positive rational, used for the approximation combinator's epsilon.
struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;
};

// Any procedure that returns an assignment together with its envy-free agent
// count; the combinator plugs the exact solver or an approximation in here.
using MaxEfProcedure = std::function<std::pair<Assignment, int>(const Instance&)>;

struct MinCovReduction {
    Instance instance;
    int k = 0;
};

// --- Balanced biclique <-> maximum envy-free assignment ---------------------

// Builds the envy-free-maximization instance for a biclique search graph:
// one agent per left vertex, one house per right vertex followed by one
// padding house per agent. An agent values house j at N when the edge is
// present and N + j (1-based j) when it is absent; padding house j is worth
// j - 1 to everyone.
Instance mbb_to_maxef(const BipartiteGraph& g);

// Forward direction: a biclique of size k yields an assignment with at least
// k envy-free agents (biclique agents take their biclique houses, everyone
// else takes her own padding house).
Assignment ef_assignment_from_biclique(const BipartiteGraph& g, const Biclique& biclique);

// Backward direction: from an assignment with val(phi) >= k, extracts a
// biclique with both sides of size floor(k/2). The k envy-free agents with
// the smallest assigned house indices are used; the first half supplies the
// left side and the last half's houses supply the right side.
Biclique biclique_from_assignment(const BipartiteGraph& g, const Assignment& phi, int k);

// Approximation combinator: reduce, run the inner max-EF procedure, extract a
// biclique, also brute-force all bicliques of size at most ceil(beta) with
// beta = 2 * (1/epsilon + 1), and return the larger of the two. With an exact
// inner solver the result is within a factor 2 * (1 + epsilon) of the
// optimum.
Biclique mbb_approx_via_maxef(const BipartiteGraph& g, const MaxEfProcedure& inner,
                              Rational epsilon);

// Largest biclique with at most `cap` vertices per side, by pruned subset
// enumeration (exact within the cap).
Biclique largest_biclique_up_to(const BipartiteGraph& g, int cap);

// --- Minimum Coverage -> binary envy-free maximization ----------------------

// Builds a binary instance with one agent per element plus one per subset,
// one house per subset plus |E| + d - ell plain houses, and the target
// k = |E| + d - q.
MinCovReduction mincov_to_binary_ef(const SetCoverageInstance& sc);

// Forward direction: a feasible selection (|I| = ell, union at most q) yields
// an assignment with at least k envy-free agents.
Assignment ef_assignment_from_cover(const SetCoverageInstance& sc,
                                    const std::vector<int>& selection);

// Rewrites an assignment on a reduced instance so that every assigned subset
// house is held by its own subset agent, without decreasing the envy-free
// count. At most d swaps are performed. Throws NotAReducedInstance when the
// instance does not have the reduced shape.
Assignment normalize_assignment(const Instance& inst, const Assignment& phi);

// Backward direction: from an assignment with val >= k, recovers a feasible
// selection of exactly ell subsets (largest indices dropped first when more
// than ell qualify).
std::vector<int> cover_from_ef_assignment(const SetCoverageInstance& sc, const Assignment& phi);

// --- Exact 3-set cover -> proportionality decision ---------------------------

// Builds the proportionality instance: one agent per universe element plus T
// dummies, three houses per triple plus T dummy houses. T defaults to
// 100 * (M + N); an override must keep N + T > 3M and 2(T + N) > 19.
Instance x3c_to_prop(const X3CInstance& x, std::optional<std::int64_t> t_override);

// Forward direction: an exact cover yields a proportional assignment (each
// element agent receives the cover house of her element; dummies take the
// dummy houses).
Assignment prop_assignment_from_cover(const X3CInstance& x, const std::vector<int>& cover,
                                      std::optional<std::int64_t> t_override);

// Backward direction: from a proportional assignment, reads off the houses
// held by element agents, checks that they form whole triples, and returns
// the resulting exact cover.
std::vector<int> cover_from_prop_assignment(const X3CInstance& x, const Assignment& phi,
                                            std::optional<std::int64_t> t_override);

}  // namespace fairhouse

#endif
