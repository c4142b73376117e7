/*
 * fairhouse - fair house allocation solvers and hardness-reduction toolkit.
 *
 * C API of the shared library. All complex data crosses the boundary as JSON
 * text; instances and assignments can additionally be held as opaque handles
 * so they are parsed and validated once. Every function returns an fh_status;
 * on failure fh_last_error() describes what went wrong (the message is
 * thread-local and valid until the next fairhouse call on that thread).
 *
 * Strings returned through char** out-parameters are heap-allocated and must
 * be released with fh_string_free().
 */

#ifndef FAIRHOUSE_H
#define FAIRHOUSE_H

#include <stdint.h>

#if defined(_WIN32)
#define FH_API __declspec(dllexport)
#else
#define FH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fh_status {
    FH_OK = 0,
    FH_ERROR_PARSE = 1,     /* malformed JSON or schema violation */
    FH_ERROR_INVALID = 2,   /* semantically invalid input */
    FH_ERROR_TOO_LARGE = 3, /* an exhaustive-solve size guard tripped */
    FH_ERROR_VERIFY = 4,    /* verification found a counterexample */
    FH_ERROR_INTERNAL = 5
} fh_status;

typedef struct fh_instance fh_instance;
typedef struct fh_assignment fh_assignment;

FH_API const char* fh_version(void);
FH_API const char* fh_status_name(fh_status status);
FH_API const char* fh_last_error(void);
FH_API void fh_string_free(char* text);

/* --- instances and assignments ------------------------------------------- */

/* Parses and validates {"n":..,"m":..,"utilities":[[..],..]}. */
FH_API fh_status fh_instance_parse(const char* json, fh_instance** out);
FH_API void fh_instance_free(fh_instance* inst);
FH_API int64_t fh_instance_agent_count(const fh_instance* inst);
FH_API int64_t fh_instance_house_count(const fh_instance* inst);
FH_API int fh_instance_is_binary(const fh_instance* inst);
FH_API fh_status fh_instance_to_json(const fh_instance* inst, char** out);

/* Parses {"assignment":[..]} and validates it against the instance. */
FH_API fh_status fh_assignment_parse(const char* json, const fh_instance* inst,
                                     fh_assignment** out);
FH_API void fh_assignment_free(fh_assignment* phi);
FH_API fh_status fh_assignment_to_json(const fh_assignment* phi, char** out);

/* --- operations ----------------------------------------------------------- */

/* Per-agent fairness report as JSON. */
FH_API fh_status fh_check(const fh_instance* inst, const fh_assignment* phi,
                          char** report_json);

/*
 * problem: "ef-exists", "max-ef", "prop-exists", "prop-all-houses",
 * "max-prop", "equitable", or "min-inequity".
 * options_json (optional, may be NULL): {"limit": <subset enumeration cap>}.
 * Result: {"status":"found","assignment":[..],"value":v} or {"status":"none"}.
 */
FH_API fh_status fh_solve(const fh_instance* inst, const char* problem,
                          const char* options_json, char** result_json);

/*
 * name: "mbb-to-maxef", "mincov-to-ef", or "x3c-to-prop".
 * input_json: the graph / coverage / exact-cover instance.
 * options_json (optional): {"t_override": <int>}.
 * Output: reduced instance JSON plus "reduction", "params", and (for the
 * coverage reduction) the target "k".
 */
FH_API fh_status fh_reduce(const char* name, const char* input_json,
                           const char* options_json, char** output_json);

/*
 * Runs the oracle-backed checks for the named reduction on the given input.
 * options_json (optional): {"t_override": <int>, "epsilon": "1" or "1/2",
 * "seed": <int>, "limit": <int>, "expected_reduction": {..reduced json..}}.
 * Returns FH_OK and a report when every check passes; FH_ERROR_VERIFY with
 * the same report (including counterexamples) when one fails.
 */
FH_API fh_status fh_verify(const char* name, const char* input_json,
                           const char* options_json, char** report_json);

/*
 * kind: "instance", "binary-instance", "bipartite", "x3c", or "mincov".
 * params_json carries the kind-specific sizes and the mandatory "seed";
 * output is deterministic in the parameters.
 */
FH_API fh_status fh_generate(const char* kind, const char* params_json,
                             char** output_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* FAIRHOUSE_H */
