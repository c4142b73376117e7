#ifndef FAIRHOUSE_CORE_HPP
#define FAIRHOUSE_CORE_HPP

#include <cstdint>
#include <vector>

#include "fairhouse/errors.hpp"

namespace fairhouse {

using Utility = std::int64_t;
using WideInt = __int128;

// Largest single utility value accepted by validation.
inline constexpr Utility kMaxUtility = 1'000'000'000'000LL;

// Resource guard: instances above this many matrix cells are rejected so a
// reduction with extreme parameters cannot exhaust memory.
inline constexpr std::uint64_t kMaxInstanceCells = 50'000'000ULL;

// n agents, m >= n houses, non-negative integer utilities. Row i of
// `utilities` holds agent i's utility for each house.
struct Instance {
    int n = 0;
    int m = 0;
    std::vector<std::vector<Utility>> utilities;
};

// Injective map from agents to houses; house_of[i] is agent i's house.
struct Assignment {
    std::vector<int> house_of;
};

struct FairnessReport {
    std::vector<bool> ef_flags;
    std::vector<bool> prop_flags;
    std::vector<Utility> received;
    int ef_count = 0;
    bool equitable = false;
    Utility inequity = 0;
};

// Checks all Instance invariants and returns the validated instance.
// Throws NonRectangularMatrix, FewerHousesThanAgents, NegativeUtility,
// Overflow, or TooLarge.
Instance validate_instance(int n, int m, std::vector<std::vector<Utility>> utilities);

// Throws NotAnInjection or IndexOutOfRange if phi is not a valid assignment
// for the instance.
void validate_assignment(const Instance& inst, const Assignment& phi);

// True iff agent i values her own house at least as much as every assigned
// house.
bool agent_is_envy_free(const Instance& inst, const Assignment& phi, int agent);

// Number of envy-free agents, val(phi), in [0, n].
int count_envy_free(const Instance& inst, const Assignment& phi);

// True iff n * u_i(phi(i)) >= sum over assigned houses of u_i, evaluated in
// 128-bit integer arithmetic (no division).
bool agent_is_proportional(const Instance& inst, const Assignment& phi, int agent);

bool is_equitable(const Instance& inst, const Assignment& phi);

// Highest received utility minus lowest.
Utility inequity(const Instance& inst, const Assignment& phi);

FairnessReport fairness_report(const Instance& inst, const Assignment& phi);

// True iff every utility is 0 or 1.
bool is_binary(const Instance& inst);

}  // namespace fairhouse

#endif
