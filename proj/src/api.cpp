#include "fairhouse/api.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>

#include "fairhouse/generators.hpp"

namespace fairhouse::api {

namespace {

std::int64_t require_integer(const Json& params, const char* key) {
    require(params.contains(key), ErrorCode::ParseError,
            std::string("missing parameter \"") + key + "\"");
    require(params[key].is_number_integer(), ErrorCode::ParseError,
            std::string("parameter \"") + key + "\" must be an integer");
    return params[key].get<std::int64_t>();
}

int require_int(const Json& params, const char* key) {
    std::int64_t value = require_integer(params, key);
    require(value >= std::numeric_limits<int>::min() && value <= std::numeric_limits<int>::max(),
            ErrorCode::ParseError, std::string("parameter \"") + key + "\" is out of range");
    return static_cast<int>(value);
}

std::uint64_t require_seed(const Json& params) {
    std::int64_t value = require_integer(params, "seed");
    require(value >= 0, ErrorCode::ParseError, "seed must be non-negative");
    return static_cast<std::uint64_t>(value);
}

// Probability in [0, 1], stored as integer millionths for portable draws.
std::uint64_t probability_millionths(const Json& params, const char* key,
                                     std::uint64_t fallback) {
    if (!params.contains(key)) return fallback;
    require(params[key].is_number(), ErrorCode::ParseError,
            std::string("parameter \"") + key + "\" must be a number");
    double p = params[key].get<double>();
    require(p >= 0.0 && p <= 1.0, ErrorCode::ParseError,
            std::string("parameter \"") + key + "\" must lie in [0, 1]");
    return static_cast<std::uint64_t>(std::llround(p * 1'000'000.0));
}

void expect_param_keys(const Json& params, std::initializer_list<const char*> allowed) {
    require(params.is_object(), ErrorCode::ParseError, "parameters must be a JSON object");
    for (const auto& [key, value] : params.items()) {
        bool known = false;
        for (const char* candidate : allowed) known = known || key == candidate;
        require(known, ErrorCode::ParseError, "unexpected parameter \"" + key + "\"");
    }
}

}  // namespace

Json check(const Instance& inst, const Assignment& phi) {
    return report_to_json(fairness_report(inst, phi));
}

Json solve(const Instance& inst, const std::string& problem, std::uint64_t subset_limit) {
    if (problem == "ef-exists") {
        std::optional<Assignment> phi = ef_exists(inst);
        return solve_result_json(phi, phi ? std::optional<Utility>(inst.n) : std::nullopt);
    }
    if (problem == "max-ef") {
        MaxSolveResult result = max_envy_free(inst, subset_limit);
        return solve_result_json(result.assignment, result.count);
    }
    if (problem == "prop-exists") {
        std::optional<Assignment> phi = prop_exists(inst, subset_limit);
        return solve_result_json(phi, phi ? std::optional<Utility>(inst.n) : std::nullopt);
    }
    if (problem == "prop-all-houses") {
        std::optional<Assignment> phi = prop_exists_all_houses(inst);
        return solve_result_json(phi, phi ? std::optional<Utility>(inst.n) : std::nullopt);
    }
    if (problem == "max-prop") {
        MaxSolveResult result = max_proportional(inst, subset_limit);
        return solve_result_json(result.assignment, result.count);
    }
    if (problem == "equitable") {
        std::optional<EquitableResult> result = equitable_exists(inst);
        if (!result) return solve_result_json(std::nullopt, std::nullopt);
        return solve_result_json(result->assignment, result->level);
    }
    if (problem == "min-inequity") {
        MinInequityResult result = min_inequity(inst);
        return solve_result_json(result.assignment, result.value);
    }
    fail(ErrorCode::InvalidArgument, "unknown problem: " + problem);
}

Json reduce(const std::string& name, const Json& input,
            std::optional<std::int64_t> t_override) {
    if (name == "mbb-to-maxef") {
        BipartiteGraph g = graph_from_json(input);
        Json out = instance_to_json(mbb_to_maxef(g));
        out["reduction"] = name;
        out["params"] = Json::object();
        return out;
    }
    if (name == "mincov-to-ef") {
        SetCoverageInstance sc = set_coverage_from_json(input);
        MinCovReduction reduction = mincov_to_binary_ef(sc);
        Json out = instance_to_json(reduction.instance);
        out["reduction"] = name;
        out["params"] = Json::object();
        out["k"] = reduction.k;
        return out;
    }
    if (name == "x3c-to-prop") {
        X3CInstance x = x3c_from_json(input);
        Json out = instance_to_json(x3c_to_prop(x, t_override));
        std::int64_t big_t = t_override.value_or(
            100 * (static_cast<std::int64_t>(x.triples.size()) + x.universe_size));
        out["reduction"] = name;
        out["params"] = Json::object();
        out["params"]["t"] = big_t;
        out["params"]["c"] = 8 * big_t + 8 * static_cast<std::int64_t>(x.universe_size) - 19;
        return out;
    }
    fail(ErrorCode::InvalidArgument, "unknown reduction: " + name);
}

VerifyOutcome run_verify(const std::string& name, const Json& input,
                         const VerifyOptions& options) {
    VerifyReport report;
    if (name == "mbb-to-maxef") {
        report = verify_mbb_reduction(graph_from_json(input), options);
    } else if (name == "mincov-to-ef") {
        report = verify_mincov_reduction(set_coverage_from_json(input), options);
    } else if (name == "x3c-to-prop") {
        report = verify_x3c_reduction(x3c_from_json(input), options);
    } else {
        fail(ErrorCode::InvalidArgument, "unknown reduction: " + name);
    }
    return {report.verified(), report.to_json()};
}

Json generate(const std::string& kind, const Json& params) {
    if (kind == "instance") {
        expect_param_keys(params, {"n", "m", "max_util", "seed"});
        Instance inst = gen_instance(require_int(params, "n"), require_int(params, "m"),
                                     require_integer(params, "max_util"), require_seed(params));
        return instance_to_json(inst);
    }
    if (kind == "binary-instance") {
        expect_param_keys(params, {"n", "m", "seed"});
        Instance inst = gen_binary_instance(require_int(params, "n"), require_int(params, "m"),
                                            require_seed(params));
        return instance_to_json(inst);
    }
    if (kind == "bipartite") {
        expect_param_keys(params, {"left", "right", "p", "seed"});
        BipartiteGraph g =
            gen_bipartite(require_int(params, "left"), require_int(params, "right"),
                          probability_millionths(params, "p", 500'000), require_seed(params));
        return graph_to_json(g);
    }
    if (kind == "x3c") {
        expect_param_keys(params, {"universe", "triples", "seed"});
        X3CInstance x = gen_x3c(require_int(params, "universe"), require_int(params, "triples"),
                                require_seed(params));
        return x3c_to_json(x);
    }
    if (kind == "mincov") {
        expect_param_keys(params, {"elements", "subsets", "q", "ell", "p", "seed"});
        SetCoverageInstance sc = gen_min_coverage(
            require_int(params, "elements"), require_int(params, "subsets"),
            require_int(params, "q"), require_int(params, "ell"),
            probability_millionths(params, "p", 500'000), require_seed(params));
        return set_coverage_to_json(sc);
    }
    fail(ErrorCode::InvalidArgument, "unknown generator kind: " + kind);
}

}  // namespace fairhouse::api
