#include "fairhouse/verify.hpp"

#include <algorithm>

#include "fairhouse/oracles.hpp"
#include "fairhouse/rng.hpp"

namespace fairhouse {

namespace {

void add_check(VerifyReport& report, const std::string& name, bool pass,
               const std::string& detail, const Json& counterexample = Json()) {
    report.checks.push_back({name, pass, detail});
    if (!pass) {
        Json entry;
        entry["check"] = name;
        entry["detail"] = detail;
        if (!counterexample.is_null()) entry["data"] = counterexample;
        report.counterexamples.push_back(std::move(entry));
    }
}

// Compares a recomputed reduction against a user-supplied reduced instance.
void check_expected_reduction(VerifyReport& report, const Instance& reduced,
                              std::optional<int> k, const Json& expected_json) {
    Instance expected = instance_from_json(expected_json);
    bool instance_match = expected.n == reduced.n && expected.m == reduced.m &&
                          expected.utilities == reduced.utilities;
    bool k_match = true;
    if (k && expected_json.contains("k")) {
        k_match = expected_json["k"].is_number_integer() &&
                  expected_json["k"].get<std::int64_t>() == *k;
    }
    bool match = instance_match && k_match;
    Json data;
    if (!match) {
        data["expected"] = expected_json;
        data["recomputed"] = instance_to_json(reduced);
        if (k) data["recomputed"]["k"] = *k;
    }
    add_check(report, "expected_reduction_matches", match,
              !instance_match ? "supplied reduced instance differs from the recomputed reduction"
              : !k_match      ? "supplied k does not match the recomputed target"
                              : "supplied reduced instance matches the recomputed reduction",
              data);
}

Assignment random_injection(int n, int m, Rng& rng) {
    std::vector<int> pool(m);
    for (int h = 0; h < m; ++h) pool[h] = h;
    Assignment phi;
    phi.house_of.resize(n);
    for (int i = 0; i < n; ++i) {
        std::uint64_t pick = rng.below(pool.size() - i);
        std::swap(pool[i], pool[i + pick]);
        phi.house_of[i] = pool[i];
    }
    return phi;
}

}  // namespace

bool VerifyReport::verified() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.pass; });
}

Json VerifyReport::to_json() const {
    Json j;
    j["verified"] = verified();
    Json check_list = Json::array();
    for (const CheckResult& check : checks) {
        Json entry;
        entry["name"] = check.name;
        entry["pass"] = check.pass;
        entry["detail"] = check.detail;
        check_list.push_back(std::move(entry));
    }
    j["checks"] = std::move(check_list);
    if (!counterexamples.empty()) j["counterexamples"] = counterexamples;
    return j;
}

Rational parse_rational(const std::string& text) {
    Rational r;
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            r.num = std::stoll(text);
            r.den = 1;
        } else {
            r.num = std::stoll(text.substr(0, slash));
            r.den = std::stoll(text.substr(slash + 1));
        }
    } catch (const std::exception&) {
        fail(ErrorCode::ParseError, "cannot parse rational: " + text);
    }
    require(r.num >= 1 && r.den >= 1, ErrorCode::InvalidArgument,
            "epsilon must be a positive rational");
    return r;
}

VerifyReport verify_mbb_reduction(const BipartiteGraph& g, const VerifyOptions& options) {
    VerifyReport report;
    Instance reduced = mbb_to_maxef(g);
    add_check(report, "agent_count_equals_left_side", reduced.n == g.left_count,
              "reduced instance has one agent per left vertex");
    if (options.expected_reduction) {
        check_expected_reduction(report, reduced, std::nullopt, *options.expected_reduction);
    }

    int opt_mbb = oracles::brute_force_opt_mbb(g);
    MaxSolveResult best = max_envy_free(reduced, options.subset_limit);
    {
        bool pass = best.count / 2 <= opt_mbb && opt_mbb <= best.count;
        Json data;
        data["graph"] = graph_to_json(g);
        data["max_ef"] = best.count;
        data["opt_mbb"] = opt_mbb;
        add_check(report, "sandwich_bound", pass,
                  "floor(maxEF/2) <= opt <= maxEF with maxEF=" + std::to_string(best.count) +
                      ", opt=" + std::to_string(opt_mbb),
                  data);
    }
    {
        // Forward: an optimum biclique yields at least opt envy-free agents.
        Biclique witness = oracles::brute_force_mbb_witness(g);
        Assignment forward = ef_assignment_from_biclique(g, witness);
        int val = count_envy_free(reduced, forward);
        Json data;
        data["biclique"] = biclique_to_json(witness);
        data["assignment"] = assignment_to_json(forward);
        add_check(report, "forward_val_at_least_biclique_size", val >= witness.size(),
                  "constructed assignment has val=" + std::to_string(val) + " >= " +
                      std::to_string(witness.size()),
                  data);
    }
    {
        // Backward: extraction returns an edge-verified biclique of half size.
        Biclique extracted = biclique_from_assignment(g, best.assignment, best.count);
        bool pass = extracted.size() == best.count / 2;
        Json data;
        data["biclique"] = biclique_to_json(extracted);
        add_check(report, "backward_extracts_half_size_biclique", pass,
                  "extracted biclique has both sides of size floor(k/2)", data);
    }
    if (options.epsilon) {
        Rational eps = *options.epsilon;
        std::uint64_t limit = options.subset_limit;
        MaxEfProcedure exact_inner = [limit](const Instance& inst) {
            MaxSolveResult r = max_envy_free(inst, limit);
            return std::make_pair(r.assignment, r.count);
        };
        Biclique approx = mbb_approx_via_maxef(g, exact_inner, eps);
        std::int64_t beta_ceil = (2 * (eps.num + eps.den) + eps.num - 1) / eps.num;
        bool ratio_ok = static_cast<std::int64_t>(approx.size()) * 2 * (eps.num + eps.den) >=
                        static_cast<std::int64_t>(opt_mbb) * eps.den;
        bool exact_ok = opt_mbb > beta_ceil || approx.size() == opt_mbb;
        Json data;
        data["approx_size"] = approx.size();
        data["opt_mbb"] = opt_mbb;
        add_check(report, "combinator_ratio_bound", ratio_ok,
                  "combinator output within 2(1+epsilon) of the optimum", data);
        add_check(report, "combinator_exact_below_beta", exact_ok,
                  "combinator is exact whenever the optimum is at most ceil(beta)", data);
    }
    return report;
}

VerifyReport verify_mincov_reduction(const SetCoverageInstance& sc, const VerifyOptions& options) {
    VerifyReport report;
    MinCovReduction reduction = mincov_to_binary_ef(sc);
    const Instance& reduced = reduction.instance;
    add_check(report, "reduced_instance_is_binary", is_binary(reduced),
              "reduction produces binary utilities");
    if (options.expected_reduction) {
        check_expected_reduction(report, reduced, reduction.k, *options.expected_reduction);
    }

    bool coverage_yes = oracles::brute_force_min_coverage(sc);
    MaxSolveResult best = max_envy_free(reduced, options.subset_limit);
    {
        bool pass = coverage_yes == (best.count >= reduction.k);
        Json data;
        data["instance"] = set_coverage_to_json(sc);
        data["max_ef"] = best.count;
        data["k"] = reduction.k;
        data["coverage_yes"] = coverage_yes;
        add_check(report, "equivalence", pass,
                  "coverage decision matches maxEF >= k (maxEF=" + std::to_string(best.count) +
                      ", k=" + std::to_string(reduction.k) + ")",
                  data);
    }
    if (coverage_yes) {
        std::optional<std::vector<int>> witness = oracles::brute_force_min_coverage_witness(sc);
        Assignment forward = ef_assignment_from_cover(sc, *witness);
        int val = count_envy_free(reduced, forward);
        Json data;
        data["selection"] = *witness;
        data["assignment"] = assignment_to_json(forward);
        add_check(report, "forward_val_at_least_k", val >= reduction.k,
                  "forward construction reaches val=" + std::to_string(val) + " >= k=" +
                      std::to_string(reduction.k),
                  data);
    }
    if (best.count >= reduction.k) {
        std::vector<int> selection = cover_from_ef_assignment(sc, best.assignment);
        std::vector<char> covered(sc.element_count, 0);
        int union_size = 0;
        for (int t : selection) {
            for (int e : sc.subsets[t]) {
                if (!covered[e]) {
                    covered[e] = 1;
                    ++union_size;
                }
            }
        }
        bool pass = static_cast<int>(selection.size()) == sc.ell && union_size <= sc.q;
        Json data;
        data["selection"] = selection;
        data["union_size"] = union_size;
        add_check(report, "backward_selection_feasible", pass,
                  "extracted selection has exactly ell subsets and union at most q", data);
    }
    {
        // Normalization never lowers the envy-free count and always parks
        // subset houses with their own agents.
        Rng rng(options.seed);
        bool pass = true;
        Json data;
        for (int trial = 0; trial < 20 && pass; ++trial) {
            Assignment phi = random_injection(reduced.n, reduced.m, rng);
            Assignment sigma = normalize_assignment(reduced, phi);
            int before = count_envy_free(reduced, phi);
            int after = count_envy_free(reduced, sigma);
            int d = static_cast<int>(sc.subsets.size());
            bool shape_ok = true;
            for (int agent = 0; agent < reduced.n; ++agent) {
                int house = sigma.house_of[agent];
                if (house < d && agent != sc.element_count + house) shape_ok = false;
            }
            pass = after >= before && shape_ok;
            if (!pass) {
                data["assignment"] = assignment_to_json(phi);
                data["normalized"] = assignment_to_json(sigma);
                data["val_before"] = before;
                data["val_after"] = after;
            }
        }
        add_check(report, "normalization_monotone", pass,
                  "val never decreases and subset houses end with their own agents", data);
    }
    return report;
}

VerifyReport verify_x3c_reduction(const X3CInstance& x, const VerifyOptions& options) {
    VerifyReport report;
    Instance reduced = x3c_to_prop(x, options.t_override);
    std::int64_t universe = x.universe_size;
    std::int64_t triples = static_cast<std::int64_t>(x.triples.size());
    std::int64_t big_t = options.t_override.value_or(100 * (triples + universe));
    add_check(report, "parameter_inequalities",
              universe + big_t > 3 * triples && 2 * (big_t + universe) > 19,
              "N + T > 3M and 2(T + N) > 19 hold for T=" + std::to_string(big_t));
    if (options.expected_reduction) {
        check_expected_reduction(report, reduced, std::nullopt, *options.expected_reduction);
    }
    {
        // Each triple house is valued by exactly its three element agents,
        // and the column over them sums to 19T.
        bool pass = true;
        for (int j = 0; j < triples && pass; ++j) {
            for (int slot = 0; slot < 3 && pass; ++slot) {
                Utility column_sum = 0;
                int supporters = 0;
                for (int agent = 0; agent < x.universe_size; ++agent) {
                    Utility u = reduced.utilities[agent][3 * j + slot];
                    if (u != 0) {
                        ++supporters;
                        column_sum += u;
                    }
                }
                pass = supporters == 3 && column_sum == 19 * big_t;
            }
        }
        add_check(report, "column_sum_identity", pass,
                  "every triple house column sums to 19T over its three supporters");
    }

    std::optional<std::vector<int>> cover = oracles::brute_force_x3c(x);
    std::optional<Assignment> prop = prop_exists(reduced, options.subset_limit);
    {
        bool pass = cover.has_value() == prop.has_value();
        Json data;
        data["instance"] = x3c_to_json(x);
        data["x3c_yes"] = cover.has_value();
        data["prop_exists"] = prop.has_value();
        add_check(report, "equivalence", pass,
                  "exact-cover decision matches proportional-assignment existence", data);
    }
    if (cover) {
        Assignment forward = prop_assignment_from_cover(x, *cover, options.t_override);
        bool pass = true;
        for (int agent = 0; agent < reduced.n && pass; ++agent) {
            pass = agent_is_proportional(reduced, forward, agent);
        }
        Json data;
        data["cover"] = *cover;
        data["assignment"] = assignment_to_json(forward);
        add_check(report, "forward_assignment_proportional", pass,
                  "cover-derived assignment is proportional for every agent", data);
    }
    if (prop) {
        std::vector<int> extracted = cover_from_prop_assignment(x, *prop, options.t_override);
        std::vector<char> covered(x.universe_size, 0);
        bool pass = static_cast<int>(extracted.size()) == x.universe_size / 3;
        for (int j : extracted) {
            for (int v : x.triples[j]) {
                if (covered[v]) pass = false;
                covered[v] = 1;
            }
        }
        for (int v = 0; v < x.universe_size && pass; ++v) pass = pass && covered[v];
        Json data;
        data["cover"] = extracted;
        add_check(report, "backward_extracts_exact_cover", pass,
                  "extracted triples are disjoint and cover the universe", data);
    }
    return report;
}

}  // namespace fairhouse
