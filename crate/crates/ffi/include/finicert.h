#ifndef FINICERT_H
#define FINICERT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; 0 to 3 match the command-line exit codes.
 */
typedef enum FcStatus {
  FC_STATUS_OK = 0,
  /**
   * The system is not finite, or a certificate did not verify.
   */
  FC_STATUS_REJECTED = 1,
  FC_STATUS_INPUT_ERROR = 2,
  FC_STATUS_BUDGET_EXCEEDED = 3,
  /**
   * A null handle or a caught panic.
   */
  FC_STATUS_INTERNAL_ERROR = 4,
} FcStatus;

/**
 * A finiteness certificate bound to the system it was made for.
 */
typedef struct FcCertificate FcCertificate;

/**
 * A parsed square homogeneous system.
 */
typedef struct FcSystem FcSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a system file (`variables: x, y` then one polynomial per line).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum FcStatus fc_system_parse(const char *text, struct FcSystem **out);

/**
 * # Safety
 * `sys` must come from [`fc_system_parse`] and not be freed twice.
 */
void fc_system_free(struct FcSystem *sys);

/**
 * Number of variables, or 0 for a null handle.
 *
 * # Safety
 * `sys` must be null or a live handle.
 */
size_t fc_system_arity(const struct FcSystem *sys);

/**
 * `FC_STATUS_OK` if the only common zero is the origin, `FC_STATUS_REJECTED`
 * otherwise with the 1-based witness chart in `witness_chart`. A `budget` of
 * 0 selects the default.
 *
 * # Safety
 * `sys` must be a live handle; `witness_chart` may be null.
 */
enum FcStatus fc_check(const struct FcSystem *sys, uint64_t budget, uint32_t *witness_chart);

/**
 * Builds and self-verifies a certificate.
 *
 * # Safety
 * `sys` must be a live handle; `out` must be writable.
 */
enum FcStatus fc_certify(const struct FcSystem *sys, uint64_t budget, struct FcCertificate **out);

/**
 * # Safety
 * `cert` must come from this library and not be freed twice.
 */
void fc_certificate_free(struct FcCertificate *cert);

/**
 * The bound `c` with `X_k^c` in the ideal for every `k`; 0 for null.
 *
 * # Safety
 * `cert` must be null or a live handle.
 */
uint32_t fc_certificate_bound(const struct FcCertificate *cert);

/**
 * JSON document; free with [`fc_string_free`]. Null on failure.
 *
 * # Safety
 * `cert` must be a live handle.
 */
char *fc_certificate_to_json(const struct FcCertificate *cert);

/**
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum FcStatus fc_certificate_from_json(const char *json, struct FcCertificate **out);

/**
 * `FC_STATUS_OK` iff the certificate's hash matches `sys` and the
 * certificate identities hold.
 *
 * # Safety
 * Both handles must be live.
 */
enum FcStatus fc_verify(const struct FcSystem *sys, const struct FcCertificate *cert);

/**
 * Fiber length over the target `num[i] / den[i]`; `-1` in `length` means
 * positive dimensional.
 *
 * # Safety
 * `num` and `den` must point to `len` values; `length` must be writable.
 */
enum FcStatus fc_fiber_length(const struct FcSystem *sys,
                              const int64_t *num,
                              const int64_t *den,
                              size_t len,
                              uint64_t budget,
                              int64_t *length);

/**
 * Message for the last failure on this thread; empty after a success.
 * Valid until the next call into this library on the same thread.
 */
const char *fc_last_error_message(void);

/**
 * # Safety
 * `s` must come from this library and not be freed twice.
 */
void fc_string_free(char *s);

/**
 * Library version, a static string.
 */
const char *fc_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FINICERT_H */
