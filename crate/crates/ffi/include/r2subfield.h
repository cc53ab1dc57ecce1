#ifndef R2SUBFIELD_H
#define R2SUBFIELD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes shared by every fallible function.
 */
typedef enum R2sStatus {
  R2S_STATUS_OK = 0,
  R2S_STATUS_INVALID_ARGUMENT = 1,
  R2S_STATUS_DEGENERATE = 2,
  R2S_STATUS_TOO_LARGE = 3,
  R2S_STATUS_NULL_POINTER = 4,
  R2S_STATUS_OUT_OF_RANGE = 5,
  R2S_STATUS_INTERNAL = 6,
} R2sStatus;

/**
 * A measured code together with its predicted parameters.
 */
typedef struct R2sReport R2sReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call into this library.
 */
const char *r2s_last_error(void);

/**
 * Builds and analyses one configuration. Subsets use `"1,3"` syntax with
 * `"-"` for the empty set. On success `*out` receives a new report.
 *
 * # Safety
 * String arguments must be null or valid NUL-terminated strings; `out` must
 * be null or writable.
 */
enum R2sStatus r2s_analyze(uint32_t m,
                           uint8_t family,
                           const char *l,
                           const char *mm,
                           const char *nn,
                           struct R2sReport **out);

/**
 * Releases a report. Passing null is a no-op.
 *
 * # Safety
 * `report` must come from [`r2s_analyze`] and not be freed twice.
 */
void r2s_report_free(struct R2sReport *report);

/**
 * Code length; 0 for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
uint64_t r2s_report_n(const struct R2sReport *report);

/**
 * Dimension; 0 for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
uint32_t r2s_report_k(const struct R2sReport *report);

/**
 * Minimum distance; 0 for a null report.
 *
 * # Safety
 * `report` must be null or a live report.
 */
uint64_t r2s_report_d(const struct R2sReport *report);

/**
 * Whether the measured code equals its prediction.
 *
 * # Safety
 * `report` must be null or a live report.
 */
bool r2s_report_matches(const struct R2sReport *report);

/**
 * Number of distinct weights (including 0) in the measured distribution.
 *
 * # Safety
 * `report` must be null or a live report.
 */
uintptr_t r2s_report_weight_count(const struct R2sReport *report);

/**
 * The `index`-th entry of the measured distribution, ascending by weight.
 *
 * # Safety
 * `report` must be null or a live report; `weight` and `count` must be null
 * or writable.
 */
enum R2sStatus r2s_report_weight(const struct R2sReport *report,
                                 uintptr_t index,
                                 uint64_t *weight,
                                 uint64_t *count);

/**
 * The report as JSON. Free the result with [`r2s_string_free`]; null on error.
 *
 * # Safety
 * `report` must be null or a live report.
 */
char *r2s_report_json(const struct R2sReport *report);

/**
 * Releases a string returned by this library. Passing null is a no-op.
 *
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void r2s_string_free(char *s);

/**
 * `Σ_{i<k} ⌈d / 2^i⌉`.
 */
uint64_t r2s_griesmer_sum(uint32_t k, uint64_t d);

/**
 * Closed-form `[n, k, d]` for a family and subset sizes.
 *
 * # Safety
 * Output pointers must be null or writable.
 */
enum R2sStatus r2s_predicted_parameters(uint8_t family,
                                        uint32_t m,
                                        uint32_t size_l,
                                        uint32_t size_m,
                                        uint32_t size_n,
                                        uint64_t *n,
                                        uint32_t *k,
                                        uint64_t *d);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* R2SUBFIELD_H */
