#ifndef FIBERTOOL_H
#define FIBERTOOL_H

/* Generated by cbindgen from fibertool-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

// Status codes returned by every fallible entry point. The numeric values
// match the CLI exit codes where a counterpart exists.
typedef enum FtStatus {
  // Success.
  FtStatus_Ok = 0,
  // Engine failure (details via ft_last_error_message).
  FtStatus_EngineError = 1,
  // Instance text failed to parse.
  FtStatus_ParseError = 2,
  // Analysis finished but some outcome is undecided (advice in report).
  FtStatus_Undecided = 3,
  // A statement verdict was refuted.
  FtStatus_Refuted = 4,
  // Null pointer or malformed argument.
  FtStatus_InvalidArgument = 5,
  // Internal panic was caught at the boundary.
  FtStatus_Panic = 6,
} FtStatus;

// Opaque parsed instance.
typedef struct FtInstance FtInstance;

// Run parameters; obtain defaults from `ft_params_default`.
typedef struct FtParams {
  uint32_t cutoff;
  uint32_t nmax;
  uint32_t window;
  uint32_t trials;
  uint32_t mmax;
  uint32_t retries;
  uint32_t cmax;
  uint64_t seed;
} FtParams;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Default parameters (cutoff 12, nmax 12, window 4, trials 16, mmax 5,
// retries 8, cmax 6, seed 0).
struct FtParams ft_params_default(void);

// Parse an instance file. On success writes a handle to `out` and returns
// Ok; the handle must be freed with `ft_instance_free`.
//
// # Safety
// `text` must be a valid NUL-terminated C string and `out` a valid pointer.
enum FtStatus ft_instance_parse(const char *text, struct FtInstance **out);

// Release an instance handle. Null is a no-op.
//
// # Safety
// `inst` must come from `ft_instance_parse` and not be freed twice.
void ft_instance_free(struct FtInstance *inst);

// Canonical rendering of a parsed instance (the same echo the reports
// carry). Caller frees with `ft_string_free`.
//
// # Safety
// `inst` must be a live handle and `out` a valid pointer.
enum FtStatus ft_instance_render(const struct FtInstance *inst, char **out);

// Run one analysis command ("invariants", "tor", "fiber", "reduction",
// "superficial", "check") and write the JSON report to `out_json` (caller
// frees with `ft_string_free`). The status reflects the report outcome:
// Ok, Undecided, or Refuted; the JSON is written in all three cases.
//
// # Safety
// All pointers must be valid; `command` NUL-terminated.
enum FtStatus ft_run_json(const struct FtInstance *inst,
                          const char *command,
                          const struct FtParams *params,
                          char **out_json);

// Convenience wrapper: full `check` with default parameters and a seed.
//
// # Safety
// As for `ft_run_json`.
enum FtStatus ft_check_json(const struct FtInstance *inst, uint64_t seed, char **out_json);

// Last error message for this thread, or null when none. Caller frees with
// `ft_string_free`.
char *ft_last_error_message(void);

// Release a string produced by this library. Null is a no-op.
//
// # Safety
// `s` must come from this library and not be freed twice.
void ft_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FIBERTOOL_H */
