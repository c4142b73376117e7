// Command-line front end for the fairhouse shared library. All solver and
// reduction work happens behind the C API; this file only marshals files,
// flags, and exit codes.
//
// Exit codes: 0 success, 2 input error, 3 size guard, 4 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fairhouse.h"

namespace {

using OptionsJson = nlohmann::ordered_json;

int exit_code_of(fh_status status) {
    switch (status) {
        case FH_OK: return 0;
        case FH_ERROR_PARSE:
        case FH_ERROR_INVALID: return 2;
        case FH_ERROR_TOO_LARGE: return 3;
        case FH_ERROR_VERIFY: return 4;
        case FH_ERROR_INTERNAL: return 1;
    }
    return 1;
}

int report_failure(fh_status status) {
    std::cerr << "error (" << fh_status_name(status) << "): " << fh_last_error() << "\n";
    return exit_code_of(status);
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream stream(path, std::ios::binary);
    if (!stream) {
        std::cerr << "error: cannot open " << path << "\n";
        return false;
    }
    std::ostringstream buffer;
    buffer << stream.rdbuf();
    out = buffer.str();
    return true;
}

int write_output(const std::string& text, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << text << "\n";
        return 0;
    }
    std::ofstream stream(output_path, std::ios::binary);
    if (!stream) {
        std::cerr << "error: cannot write " << output_path << "\n";
        return 2;
    }
    stream << text << "\n";
    return 0;
}

struct StringGuard {
    char* value = nullptr;
    ~StringGuard() { fh_string_free(value); }
};

struct InstanceGuard {
    fh_instance* value = nullptr;
    ~InstanceGuard() { fh_instance_free(value); }
};

struct AssignmentGuard {
    fh_assignment* value = nullptr;
    ~AssignmentGuard() { fh_assignment_free(value); }
};

int run_check(const std::string& instance_path, const std::string& assignment_path,
              const std::string& output_path) {
    std::string instance_text;
    std::string assignment_text;
    if (!read_file(instance_path, instance_text) || !read_file(assignment_path, assignment_text))
        return 2;
    InstanceGuard inst;
    if (fh_status s = fh_instance_parse(instance_text.c_str(), &inst.value))
        return report_failure(s);
    AssignmentGuard phi;
    if (fh_status s = fh_assignment_parse(assignment_text.c_str(), inst.value, &phi.value))
        return report_failure(s);
    StringGuard report;
    if (fh_status s = fh_check(inst.value, phi.value, &report.value)) return report_failure(s);
    return write_output(report.value, output_path);
}

int run_solve(const std::string& problem, const std::string& instance_path,
              std::optional<std::uint64_t> limit, const std::string& output_path) {
    std::string instance_text;
    if (!read_file(instance_path, instance_text)) return 2;
    InstanceGuard inst;
    if (fh_status s = fh_instance_parse(instance_text.c_str(), &inst.value))
        return report_failure(s);
    OptionsJson options = OptionsJson::object();
    if (limit) options["limit"] = *limit;
    StringGuard result;
    if (fh_status s = fh_solve(inst.value, problem.c_str(), options.dump().c_str(),
                               &result.value))
        return report_failure(s);
    return write_output(result.value, output_path);
}

int run_reduce(const std::string& name, const std::string& input_path,
               std::optional<std::int64_t> t_override, const std::string& output_path) {
    std::string input_text;
    if (!read_file(input_path, input_text)) return 2;
    OptionsJson options = OptionsJson::object();
    if (t_override) options["t_override"] = *t_override;
    StringGuard output;
    if (fh_status s = fh_reduce(name.c_str(), input_text.c_str(), options.dump().c_str(),
                                &output.value))
        return report_failure(s);
    return write_output(output.value, output_path);
}

int run_verify(const std::string& name, const std::string& input_path,
               std::optional<std::int64_t> t_override, const std::string& epsilon,
               std::optional<std::uint64_t> seed, std::optional<std::uint64_t> limit,
               const std::string& reduced_path, const std::string& output_path) {
    std::string input_text;
    if (!read_file(input_path, input_text)) return 2;
    OptionsJson options = OptionsJson::object();
    if (t_override) options["t_override"] = *t_override;
    if (!epsilon.empty()) options["epsilon"] = epsilon;
    if (seed) options["seed"] = *seed;
    if (limit) options["limit"] = *limit;
    if (!reduced_path.empty()) {
        std::string reduced_text;
        if (!read_file(reduced_path, reduced_text)) return 2;
        OptionsJson reduced = OptionsJson::parse(reduced_text, nullptr, false);
        if (reduced.is_discarded()) {
            std::cerr << "error: " << reduced_path << " is not valid JSON\n";
            return 2;
        }
        options["expected_reduction"] = reduced;
    }
    StringGuard report;
    fh_status status =
        fh_verify(name.c_str(), input_text.c_str(), options.dump().c_str(), &report.value);
    if (status != FH_OK && status != FH_ERROR_VERIFY) return report_failure(status);
    int write_status = write_output(report.value ? report.value : "", output_path);
    if (write_status != 0) return write_status;
    if (status == FH_ERROR_VERIFY) {
        std::cerr << "verification FAILED; counterexamples are in the report above\n";
        return 4;
    }
    return 0;
}

int run_gen(const std::string& kind, const OptionsJson& params, const std::string& output_path) {
    StringGuard output;
    if (fh_status s = fh_generate(kind.c_str(), params.dump().c_str(), &output.value))
        return report_failure(s);
    return write_output(output.value, output_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fair house allocation solvers and hardness-reduction toolkit"};
    app.require_subcommand(1);

    std::string instance_path;
    std::string assignment_path;
    std::string input_path;
    std::string output_path;
    std::string reduced_path;
    std::string epsilon;
    std::string problem;
    std::string reduction_name;
    std::string gen_kind;
    std::optional<std::int64_t> t_override;
    std::optional<std::uint64_t> seed_opt;
    std::optional<std::uint64_t> limit_opt;

    CLI::App* check = app.add_subcommand("check", "evaluate fairness of an assignment");
    check->add_option("--instance", instance_path, "instance JSON file")->required();
    check->add_option("--assignment", assignment_path, "assignment JSON file")->required();
    check->add_option("--output", output_path, "write JSON here instead of stdout");

    CLI::App* solve = app.add_subcommand("solve", "run a solver on an instance");
    solve
        ->add_option("problem", problem,
                     "ef-exists | max-ef | prop-exists | prop-all-houses | max-prop | "
                     "equitable | min-inequity")
        ->required();
    solve->add_option("--instance", instance_path, "instance JSON file")->required();
    solve->add_option("--limit", limit_opt, "subset enumeration cap for the exact solvers");
    solve->add_option("--output", output_path, "write JSON here instead of stdout");

    CLI::App* reduce = app.add_subcommand("reduce", "materialize a hardness reduction");
    reduce
        ->add_option("name", reduction_name, "mbb-to-maxef | mincov-to-ef | x3c-to-prop")
        ->required();
    reduce->add_option("input", input_path, "input JSON file")->required();
    reduce->add_option("--t-override", t_override, "dummy-agent count override (x3c-to-prop)");
    reduce->add_option("--output", output_path, "write JSON here instead of stdout");

    CLI::App* verify = app.add_subcommand(
        "verify", "check a reduction against the brute-force oracles (exit 4 on failure)");
    verify
        ->add_option("name", reduction_name, "mbb-to-maxef | mincov-to-ef | x3c-to-prop")
        ->required();
    verify->add_option("input", input_path, "input JSON file")->required();
    verify->add_option("--t-override", t_override, "dummy-agent count override (x3c-to-prop)");
    verify->add_option("--epsilon", epsilon, "combinator epsilon, e.g. 1 or 1/2 (mbb-to-maxef)");
    verify->add_option("--seed", seed_opt, "seed for the randomized normalization checks");
    verify->add_option("--limit", limit_opt, "subset enumeration cap for the exact solvers");
    verify->add_option("--reduced", reduced_path,
                       "reduced-instance JSON to compare against the recomputed reduction");
    verify->add_option("--output", output_path, "write JSON here instead of stdout");

    CLI::App* gen = app.add_subcommand("gen", "generate a seeded random input file");
    int gen_n = 0, gen_m = 0, gen_left = 0, gen_right = 0;
    int gen_universe = 0, gen_triples = 0, gen_elements = 0, gen_subsets = 0, gen_q = 0,
        gen_ell = 0;
    std::int64_t gen_max_util = 9;
    double gen_p = 0.5;
    gen->add_option("kind", gen_kind, "instance | binary-instance | bipartite | x3c | mincov")
        ->required();
    gen->add_option("--n", gen_n, "agent count");
    gen->add_option("--m", gen_m, "house count");
    gen->add_option("--max-util", gen_max_util, "largest utility value (default 9)");
    gen->add_option("--left", gen_left, "left vertex count");
    gen->add_option("--right", gen_right, "right vertex count");
    gen->add_option("--p", gen_p, "edge / membership probability (default 0.5)");
    gen->add_option("--universe", gen_universe, "universe size (multiple of 3)");
    gen->add_option("--triples", gen_triples, "number of triples");
    gen->add_option("--elements", gen_elements, "element count");
    gen->add_option("--subsets", gen_subsets, "subset count");
    gen->add_option("--q", gen_q, "coverage bound");
    gen->add_option("--ell", gen_ell, "selection size");
    gen->add_option("--seed", seed_opt, "generator seed")->required();
    gen->add_option("--output", output_path, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (check->parsed()) return run_check(instance_path, assignment_path, output_path);
    if (solve->parsed()) return run_solve(problem, instance_path, limit_opt, output_path);
    if (reduce->parsed()) return run_reduce(reduction_name, input_path, t_override, output_path);
    if (verify->parsed()) {
        return run_verify(reduction_name, input_path, t_override, epsilon, seed_opt, limit_opt,
                          reduced_path, output_path);
    }
    if (gen->parsed()) {
        OptionsJson params = OptionsJson::object();
        if (gen_kind == "instance") {
            params["n"] = gen_n;
            params["m"] = gen_m;
            params["max_util"] = gen_max_util;
        } else if (gen_kind == "binary-instance") {
            params["n"] = gen_n;
            params["m"] = gen_m;
        } else if (gen_kind == "bipartite") {
            params["left"] = gen_left;
            params["right"] = gen_right;
            params["p"] = gen_p;
        } else if (gen_kind == "x3c") {
            params["universe"] = gen_universe;
            params["triples"] = gen_triples;
        } else if (gen_kind == "mincov") {
            params["elements"] = gen_elements;
            params["subsets"] = gen_subsets;
            params["q"] = gen_q;
            params["ell"] = gen_ell;
            params["p"] = gen_p;
        } else {
            std::cerr << "error: unknown gen kind: " << gen_kind << "\n";
            return 2;
        }
        params["seed"] = *seed_opt;
        return run_gen(gen_kind, params, output_path);
    }
    return 2;
}
