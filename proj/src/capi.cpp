#include "fairhouse.h"

#include <cstring>
#include <new>
#include <string>

#include "fairhouse/api.hpp"

using fairhouse::Error;
using fairhouse::ErrorCode;
using fairhouse::Json;

struct fh_instance {
    fairhouse::Instance value;
};

struct fh_assignment {
    fairhouse::Assignment value;
};

namespace {

thread_local std::string g_last_error;

fh_status status_of(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
            return FH_ERROR_PARSE;
        case ErrorCode::TooLarge:
        case ErrorCode::InstanceTooLargeForExactSolve:
            return FH_ERROR_TOO_LARGE;
        case ErrorCode::VerificationFailed:
            return FH_ERROR_VERIFY;
        case ErrorCode::Internal:
        case ErrorCode::MalformedQ:
            return FH_ERROR_INTERNAL;
        default:
            return FH_ERROR_INVALID;
    }
}

char* copy_string(const std::string& text) {
    char* out = new char[text.size() + 1];
    std::memcpy(out, text.c_str(), text.size() + 1);
    return out;
}

// Runs fn, translating exceptions into status codes and the thread-local
// error message.
template <typename Fn>
fh_status guarded(Fn&& fn) {
    try {
        g_last_error.clear();
        return fn();
    } catch (const Error& e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return FH_ERROR_INTERNAL;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return FH_ERROR_INTERNAL;
    }
}

fh_status require_arg(bool ok, const char* message) {
    if (ok) return FH_OK;
    g_last_error = message;
    return FH_ERROR_INVALID;
}

Json parse_options(const char* options_json) {
    if (options_json == nullptr || *options_json == '\0') return Json::object();
    Json options = fairhouse::parse_json_text(options_json);
    fairhouse::require(options.is_object(), ErrorCode::ParseError,
                       "options must be a JSON object");
    return options;
}

std::uint64_t limit_from(const Json& options) {
    if (!options.contains("limit")) return fairhouse::kDefaultSubsetLimit;
    fairhouse::require(options["limit"].is_number_integer() &&
                           options["limit"].get<std::int64_t>() > 0,
                       ErrorCode::ParseError, "limit must be a positive integer");
    return options["limit"].get<std::uint64_t>();
}

}  // namespace

extern "C" {

const char* fh_version(void) { return "1.0.0"; }

const char* fh_status_name(fh_status status) {
    switch (status) {
        case FH_OK: return "ok";
        case FH_ERROR_PARSE: return "parse-error";
        case FH_ERROR_INVALID: return "invalid-input";
        case FH_ERROR_TOO_LARGE: return "too-large";
        case FH_ERROR_VERIFY: return "verification-failed";
        case FH_ERROR_INTERNAL: return "internal-error";
    }
    return "unknown";
}

const char* fh_last_error(void) { return g_last_error.c_str(); }

void fh_string_free(char* text) { delete[] text; }

fh_status fh_instance_parse(const char* json, fh_instance** out) {
    if (fh_status bad = require_arg(json && out, "null argument")) return bad;
    return guarded([&]() {
        auto inst = fairhouse::instance_from_json(fairhouse::parse_json_text(json));
        *out = new fh_instance{std::move(inst)};
        return FH_OK;
    });
}

void fh_instance_free(fh_instance* inst) { delete inst; }

int64_t fh_instance_agent_count(const fh_instance* inst) { return inst ? inst->value.n : 0; }

int64_t fh_instance_house_count(const fh_instance* inst) { return inst ? inst->value.m : 0; }

int fh_instance_is_binary(const fh_instance* inst) {
    return inst && fairhouse::is_binary(inst->value) ? 1 : 0;
}

fh_status fh_instance_to_json(const fh_instance* inst, char** out) {
    if (fh_status bad = require_arg(inst && out, "null argument")) return bad;
    return guarded([&]() {
        *out = copy_string(fairhouse::instance_to_json(inst->value).dump());
        return FH_OK;
    });
}

fh_status fh_assignment_parse(const char* json, const fh_instance* inst, fh_assignment** out) {
    if (fh_status bad = require_arg(json && inst && out, "null argument")) return bad;
    return guarded([&]() {
        auto phi = fairhouse::assignment_from_json(fairhouse::parse_json_text(json));
        fairhouse::validate_assignment(inst->value, phi);
        *out = new fh_assignment{std::move(phi)};
        return FH_OK;
    });
}

void fh_assignment_free(fh_assignment* phi) { delete phi; }

fh_status fh_assignment_to_json(const fh_assignment* phi, char** out) {
    if (fh_status bad = require_arg(phi && out, "null argument")) return bad;
    return guarded([&]() {
        *out = copy_string(fairhouse::assignment_to_json(phi->value).dump());
        return FH_OK;
    });
}

fh_status fh_check(const fh_instance* inst, const fh_assignment* phi, char** report_json) {
    if (fh_status bad = require_arg(inst && phi && report_json, "null argument")) return bad;
    return guarded([&]() {
        *report_json = copy_string(fairhouse::api::check(inst->value, phi->value).dump());
        return FH_OK;
    });
}

fh_status fh_solve(const fh_instance* inst, const char* problem, const char* options_json,
                   char** result_json) {
    if (fh_status bad = require_arg(inst && problem && result_json, "null argument")) return bad;
    return guarded([&]() {
        Json options = parse_options(options_json);
        Json result = fairhouse::api::solve(inst->value, problem, limit_from(options));
        *result_json = copy_string(result.dump());
        return FH_OK;
    });
}

fh_status fh_reduce(const char* name, const char* input_json, const char* options_json,
                    char** output_json) {
    if (fh_status bad = require_arg(name && input_json && output_json, "null argument"))
        return bad;
    return guarded([&]() {
        Json options = parse_options(options_json);
        std::optional<std::int64_t> t_override;
        if (options.contains("t_override")) {
            fairhouse::require(options["t_override"].is_number_integer(), ErrorCode::ParseError,
                               "t_override must be an integer");
            t_override = options["t_override"].get<std::int64_t>();
        }
        Json output = fairhouse::api::reduce(name, fairhouse::parse_json_text(input_json),
                                             t_override);
        *output_json = copy_string(output.dump());
        return FH_OK;
    });
}

fh_status fh_verify(const char* name, const char* input_json, const char* options_json,
                    char** report_json) {
    if (fh_status bad = require_arg(name && input_json && report_json, "null argument"))
        return bad;
    return guarded([&]() {
        Json options = parse_options(options_json);
        fairhouse::VerifyOptions verify_options;
        if (options.contains("t_override")) {
            fairhouse::require(options["t_override"].is_number_integer(), ErrorCode::ParseError,
                               "t_override must be an integer");
            verify_options.t_override = options["t_override"].get<std::int64_t>();
        }
        if (options.contains("epsilon")) {
            if (options["epsilon"].is_string()) {
                verify_options.epsilon =
                    fairhouse::parse_rational(options["epsilon"].get<std::string>());
            } else {
                fairhouse::require(options["epsilon"].is_number_integer(), ErrorCode::ParseError,
                                   "epsilon must be a string rational or an integer");
                verify_options.epsilon =
                    fairhouse::Rational{options["epsilon"].get<std::int64_t>(), 1};
                fairhouse::require(verify_options.epsilon->num >= 1, ErrorCode::InvalidArgument,
                                   "epsilon must be positive");
            }
        }
        if (options.contains("seed")) {
            fairhouse::require(options["seed"].is_number_integer() &&
                                   options["seed"].get<std::int64_t>() >= 0,
                               ErrorCode::ParseError, "seed must be a non-negative integer");
            verify_options.seed = options["seed"].get<std::uint64_t>();
        }
        verify_options.subset_limit = limit_from(options);
        if (options.contains("expected_reduction")) {
            verify_options.expected_reduction = options["expected_reduction"];
        }
        fairhouse::api::VerifyOutcome outcome =
            fairhouse::api::run_verify(name, fairhouse::parse_json_text(input_json),
                                       verify_options);
        *report_json = copy_string(outcome.report.dump());
        if (!outcome.passed) {
            g_last_error = "verification found a counterexample";
            return FH_ERROR_VERIFY;
        }
        return FH_OK;
    });
}

fh_status fh_generate(const char* kind, const char* params_json, char** output_json) {
    if (fh_status bad = require_arg(kind && params_json && output_json, "null argument"))
        return bad;
    return guarded([&]() {
        Json params = fairhouse::parse_json_text(params_json);
        *output_json = copy_string(fairhouse::api::generate(kind, params).dump());
        return FH_OK;
    });
}

}  // extern "C"
