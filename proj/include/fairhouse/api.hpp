#ifndef FAIRHOUSE_API_HPP
#define FAIRHOUSE_API_HPP

#include <string>

#include "fairhouse/verify.hpp"

// JSON-level entry points shared by the C API and the command-line tool.
// Every function throws fairhouse::Error on bad input.
namespace fairhouse::api {

// Fairness report for a validated (instance, assignment) pair.
Json check(const Instance& inst, const Assignment& phi);

// problem: ef-exists | max-ef | prop-exists | prop-all-houses | max-prop |
// equitable | min-inequity.
Json solve(const Instance& inst, const std::string& problem, std::uint64_t subset_limit);

// name: mbb-to-maxef | mincov-to-ef | x3c-to-prop. Returns the reduced
// instance JSON plus a metadata block ("reduction", "params", and "k" for
// the coverage reduction).
Json reduce(const std::string& name, const Json& input,
            std::optional<std::int64_t> t_override);

struct VerifyOutcome {
    bool passed = false;
    Json report;
};

// Runs the oracle-backed equivalence checks for the named reduction.
VerifyOutcome run_verify(const std::string& name, const Json& input,
                         const VerifyOptions& options);

// kind: instance | binary-instance | bipartite | x3c | mincov. Parameters are
// kind-specific; "seed" is always required.
Json generate(const std::string& kind, const Json& params);

}  // namespace fairhouse::api

#endif
