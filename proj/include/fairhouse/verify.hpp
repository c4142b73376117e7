#ifndef FAIRHOUSE_VERIFY_HPP
#define FAIRHOUSE_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fairhouse/json_io.hpp"
#include "fairhouse/reductions.hpp"
#include "fairhouse/solvers.hpp"

namespace fairhouse {

struct VerifyOptions {
    std::optional<std::int64_t> t_override;
    std::optional<Rational> epsilon;
    std::uint64_t seed = 0;
    std::uint64_t subset_limit = kDefaultSubsetLimit;
    // When present, the freshly computed reduction is compared against this
    // JSON (a negative control for tampered reduction files).
    std::optional<Json> expected_reduction;
};

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Outcome of running one reduction's equivalence and structural checks
// against the brute-force oracles.
struct VerifyReport {
    std::vector<CheckResult> checks;
    Json counterexamples = Json::array();

    bool verified() const;
    Json to_json() const;
};

VerifyReport verify_mbb_reduction(const BipartiteGraph& g, const VerifyOptions& options);
VerifyReport verify_mincov_reduction(const SetCoverageInstance& sc, const VerifyOptions& options);
VerifyReport verify_x3c_reduction(const X3CInstance& x, const VerifyOptions& options);

// "1", "3/4", ... -> Rational; rejects zero or negative values.
Rational parse_rational(const std::string& text);

}  // namespace fairhouse

#endif
