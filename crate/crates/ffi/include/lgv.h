/* C interface to the lgv exact computational-algebra library. */

#ifndef LGV_H
#define LGV_H

/* Generated from src/lib.rs by the lgv-ffi build script; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum LgvStatus {
  /**
   * The call succeeded and any out pointers were written.
   */
  LGV_STATUS_OK = 0,
  /**
   * A pointer was null, a string was not UTF-8, or an argument value was
   * rejected (unknown field or order name, invalid chart parameters).
   */
  LGV_STATUS_INVALID_ARGUMENT = 1,
  /**
   * Input text did not match the ideal-file format.
   */
  LGV_STATUS_PARSE_ERROR = 2,
  /**
   * A degree, basis-size, or wall-clock guard stopped the computation
   * before it finished; retry with larger limits if the wait is worth it.
   */
  LGV_STATUS_RESOURCE_LIMIT = 3,
  /**
   * The request was well formed but has no answer — for example the
   * dimension of an empty scheme, or maps that fail `f·g = g·f = s·Id`.
   */
  LGV_STATUS_DOMAIN_ERROR = 4,
  /**
   * A caught panic or internal inconsistency; please report these.
   */
  LGV_STATUS_INTERNAL_ERROR = 5,
} LgvStatus;

/**
 * An ideal together with its ambient ring. Opaque: create one with
 * [`lgv_ideal_parse`], [`lgv_chart_ideal`], [`lgv_commuting_pair_ideal`] or
 * [`lgv_ideal_groebner`], and release it with [`lgv_ideal_free`].
 */
typedef struct LgvIdeal LgvIdeal;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Version of this library as a static NUL-terminated string; do not free.
 */
const char *lgv_version(void);

/**
 * Message describing the most recent failure on the calling thread, as a
 * NUL-terminated string; empty until some call fails. The pointer stays
 * valid until the next failing call on the same thread. Do not free it.
 */
const char *lgv_last_error_message(void);

/**
 * Parse ideal-file text — a `vars:` header, an optional `weights:` header,
 * `#` comments, and one polynomial generator per line — over the field
 * named by `field_text` (`"rat"`, or `"fp:<p>"` for an odd prime
 * `p < 2^31`). On success writes a caller-owned handle to `*out`.
 *
 * # Safety
 * `text` and `field_text` must be NUL-terminated strings and `out` a
 * writable slot, all valid for the duration of the call.
 */
enum LgvStatus lgv_ideal_parse(const char *text, const char *field_text, struct LgvIdeal **out);

/**
 * Render the ideal back into the text format accepted by
 * [`lgv_ideal_parse`]. On success writes a caller-owned NUL-terminated
 * string to `*out`; release it with [`lgv_string_free`].
 *
 * # Safety
 * `handle` must be a live handle from this library and `out` a writable
 * slot, both valid for the duration of the call.
 */
enum LgvStatus lgv_ideal_emit(const struct LgvIdeal *handle, char **out);

/**
 * Compute the reduced Groebner basis of the ideal under `order_text`
 * (`"lex"`, `"grevlex"`, or `"wgrevlex"`) and write it to `*out` as a new
 * caller-owned ideal whose generators are the basis elements, monic and
 * sorted by ascending leading term. `max_degree` and `timeout_seconds`
 * bound the computation; zero keeps the stock limits (64 / 300 s).
 *
 * # Safety
 * `handle` must be a live handle from this library, `order_text` a
 * NUL-terminated string, and `out` a writable slot, all valid for the
 * duration of the call.
 */
enum LgvStatus lgv_ideal_groebner(const struct LgvIdeal *handle,
                                  const char *order_text,
                                  uint64_t max_degree,
                                  uint64_t timeout_seconds,
                                  struct LgvIdeal **out);

/**
 * Krull dimension of the quotient by the ideal, written to `*out_dim`.
 * Fails with `LGV_STATUS_DOMAIN_ERROR` when the ideal contains 1 (the
 * empty scheme has no dimension). `timeout_seconds` zero keeps the stock
 * 300-second limit.
 *
 * # Safety
 * `handle` must be a live handle from this library and `out_dim` a
 * writable slot, both valid for the duration of the call.
 */
enum LgvStatus lgv_ideal_dimension(const struct LgvIdeal *handle,
                                   uint64_t timeout_seconds,
                                   int64_t *out_dim);

/**
 * Build the canonical chart ideal of a chain of `n` linked rank-`r`
 * subspaces of `d`-space and write a caller-owned handle to `*out`. For
 * `n = 2` this is the standard two-node chart with the largest exchanged
 * block; the variables are `A<i>_<j>_<k>` plus the base parameter `s`.
 *
 * # Safety
 * `field_text` must be a NUL-terminated string and `out` a writable slot,
 * both valid for the duration of the call.
 */
enum LgvStatus lgv_chart_ideal(uint32_t d,
                               uint32_t r,
                               uint32_t n,
                               const char *field_text,
                               struct LgvIdeal **out);

/**
 * Build the commuting-pair ideal for two `ell × ell` matrices `x`, `y`:
 * the entries of `x·y − s·Id` and `y·x − s·Id` in the ring `k[s, x, y]`
 * with `s` of weight two. Writes a caller-owned handle to `*out`.
 *
 * # Safety
 * `field_text` must be a NUL-terminated string and `out` a writable slot,
 * both valid for the duration of the call.
 */
enum LgvStatus lgv_commuting_pair_ideal(uint32_t ell,
                                        const char *field_text,
                                        struct LgvIdeal **out);

/**
 * Run the full structural verification suite — local product structure,
 * flatness, dimensions, linkage conditions, Cohen-Macaulayness, reduced
 * fibers, gluing, plus planted failure controls — and write the report as
 * a caller-owned JSON string to `*out_json` (release it with
 * [`lgv_string_free`]). `spec_dmax` caps the ambient dimension swept by
 * the per-chart checks; zero keeps the stock value 4. The status is OK
 * whenever the suite ran to completion; inspect the per-check `status`
 * fields in the JSON for PASS / FAIL / INCONCLUSIVE outcomes.
 *
 * # Safety
 * `field_text` must be a NUL-terminated string and `out_json` a writable
 * slot, both valid for the duration of the call.
 */
enum LgvStatus lgv_suite_run(const char *field_text,
                             uint64_t seed,
                             uint32_t spec_dmax,
                             char **out_json);

/**
 * Release a handle returned by this library. Null is a no-op.
 *
 * # Safety
 * `handle` must be null or a pointer returned by this library that has not
 * already been freed.
 */
void lgv_ideal_free(struct LgvIdeal *handle);

/**
 * Release a string written to an out pointer by this library. Null is a
 * no-op.
 *
 * # Safety
 * `text` must be null or a string pointer returned by this library that
 * has not already been freed.
 */
void lgv_string_free(char *text);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* LGV_H */
