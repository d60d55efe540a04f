#ifndef FLTL_H
#define FLTL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum FltlStatus {
  FLTL_STATUS_OK = 0,
  FLTL_STATUS_NULL_POINTER = 1,
  FLTL_STATUS_INVALID_UTF8 = 2,
  FLTL_STATUS_PARSE_ERROR = 3,
  FLTL_STATUS_TRACE_ERROR = 4,
  FLTL_STATUS_ALPHABET_MISMATCH = 5,
  FLTL_STATUS_UNSUPPORTED_FORMAT = 6,
  FLTL_STATUS_INTERNAL = 7,
} FltlStatus;

typedef enum FltlMode {
  FLTL_MODE_RELAXED = 0,
  FLTL_MODE_STRICT = 1,
} FltlMode;

/**
 * Opaque parsed formula.
 */
typedef struct FltlFormula FltlFormula;

/**
 * Opaque automaton with merged edges.
 */
typedef struct FltlNfa FltlNfa;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread, or NULL. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *fltl_last_error(void);

/**
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum FltlStatus fltl_formula_parse(const char *text, struct FltlFormula **out);

/**
 * Canonical text of a formula, to be released with `fltl_string_free`.
 *
 * # Safety
 * `formula` must come from `fltl_formula_parse`; `out` must be writable.
 */
enum FltlStatus fltl_formula_print(const struct FltlFormula *formula, char **out);

/**
 * # Safety
 * `formula` must come from `fltl_formula_parse` and not be used afterwards.
 */
void fltl_formula_free(struct FltlFormula *formula);

/**
 * Build the automaton for a formula and merge parallel edges.
 *
 * # Safety
 * `formula` must come from `fltl_formula_parse`; `out` must be writable.
 */
enum FltlStatus fltl_nfa_build(const struct FltlFormula *formula,
                               enum FltlMode mode,
                               struct FltlNfa **out);

/**
 * # Safety
 * `nfa` must come from `fltl_nfa_build` and not be used afterwards.
 */
void fltl_nfa_free(struct FltlNfa *nfa);

/**
 * Number of states; 0 for NULL.
 *
 * # Safety
 * `nfa` must be NULL or come from `fltl_nfa_build`.
 */
size_t fltl_nfa_state_count(const struct FltlNfa *nfa);

/**
 * Number of merged symbolic edges; 0 for NULL.
 *
 * # Safety
 * `nfa` must be NULL or come from `fltl_nfa_build`.
 */
size_t fltl_nfa_edge_count(const struct FltlNfa *nfa);

/**
 * Run one trace in the line format (`a b; ; a`, or `<eps>`).
 *
 * # Safety
 * `nfa` must come from `fltl_nfa_build`, `trace` must be NUL-terminated and
 * `accepted` writable.
 */
enum FltlStatus fltl_nfa_accepts(const struct FltlNfa *nfa, const char *trace, bool *accepted);

/**
 * Render the automaton as `"dot"` or `"json"`; release with `fltl_string_free`.
 *
 * # Safety
 * `nfa` must come from `fltl_nfa_build`, `format` must be NUL-terminated and
 * `out` writable.
 */
enum FltlStatus fltl_nfa_export(const struct FltlNfa *nfa, const char *format, char **out);

/**
 * Decide satisfiability. When satisfiable and `witness` is not NULL, a
 * shortest accepted trace is written there in the line format; otherwise
 * `*witness` is set to NULL.
 *
 * # Safety
 * `formula` must come from `fltl_formula_parse`; `satisfiable` must be
 * writable and `witness` NULL or writable.
 */
enum FltlStatus fltl_formula_sat(const struct FltlFormula *formula,
                                 bool *satisfiable,
                                 char **witness);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void fltl_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FLTL_H */
