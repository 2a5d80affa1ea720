#ifndef HWP_H
#define HWP_H

/* Generated by cbindgen from crates/hwp-ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum HwpStatus {
  HWP_STATUS_OK = 0,
  HWP_STATUS_NULL_POINTER = 1,
  HWP_STATUS_INVALID_INPUT = 2,
  HWP_STATUS_UNSUPPORTED = 3,
  HWP_STATUS_PROVIDER_EXHAUSTED = 4,
  HWP_STATUS_INVALID_CERTIFICATE = 5,
  HWP_STATUS_INTERNAL = 6,
  HWP_STATUS_PANIC = 7,
} HwpStatus;

typedef enum HwpNKind {
  /**
   * N = 2x
   */
  HWP_N_KIND_TWO_X = 0,
  /**
   * N = 3x
   */
  HWP_N_KIND_THREE_X = 1,
} HwpNKind;

/**
 * Opaque certificate handle.
 */
typedef struct HwpCertificate HwpCertificate;

typedef struct HwpCertInfo {
  size_t v;
  size_t n;
  size_t beta;
  size_t parts;
  size_t part_size;
} HwpCertInfo;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Construct and verify a certificate for HWP(6xt; 6, N; 1, 3xt-2).
 *
 * # Safety
 * `out` must be a valid pointer to writable storage for one handle pointer.
 */
enum HwpStatus hwp_solve(uint32_t x, uint32_t t, enum HwpNKind n_kind, struct HwpCertificate **out);

/**
 * Run the verifier and store the verdict in `*valid`. An invalid certificate
 * returns `InvalidCertificate`, with the failing checks in `hwp_last_error()`.
 *
 * # Safety
 * `cert` must be a live handle; `valid` must be writable.
 */
enum HwpStatus hwp_verify(const struct HwpCertificate *cert, bool *valid);

/**
 * Header numbers of a certificate.
 *
 * # Safety
 * `cert` must be a live handle; `info` must be writable.
 */
enum HwpStatus hwp_certificate_info(const struct HwpCertificate *cert, struct HwpCertInfo *info);

/**
 * Serialize to JSON. Free the string with `hwp_string_free`.
 *
 * # Safety
 * `cert` must be a live handle; `out` must be writable.
 */
enum HwpStatus hwp_certificate_to_json(const struct HwpCertificate *cert, char **out);

/**
 * Parse a certificate from JSON. Parsing does not verify; call `hwp_verify`.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum HwpStatus hwp_certificate_from_json(const char *json, struct HwpCertificate **out);

/**
 * # Safety
 * `cert` must be null or a handle not yet freed.
 */
void hwp_certificate_free(struct HwpCertificate *cert);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void hwp_string_free(char *s);

/**
 * Message for the last failing call on this thread; empty after a success.
 * The pointer stays valid until the next hwp call on the same thread.
 */
const char *hwp_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HWP_H */
