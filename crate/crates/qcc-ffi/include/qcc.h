#ifndef QCC_H
#define QCC_H

/* Generated by cbindgen from the qcc-ffi crate; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * The two constructions.
 */
typedef enum QccFamily {
  QCC_FAMILY_I = 1,
  QCC_FAMILY_II = 2,
} QccFamily;

/**
 * Call outcome. Mirrors the CLI exit codes for the fallible values.
 */
typedef enum QccStatus {
  QCC_STATUS_OK = 0,
  QCC_STATUS_INTERNAL_ERROR = 1,
  QCC_STATUS_PRECONDITION_VIOLATED = 2,
  QCC_STATUS_BUDGET_EXCEEDED = 3,
  QCC_STATUS_NULL_ARGUMENT = 4,
  QCC_STATUS_PANIC = 5,
} QccStatus;

/**
 * Opaque certificate handle.
 */
typedef struct QccCertificateHandle QccCertificateHandle;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Most recent error message on this thread, or NULL when the last call
 * succeeded. The caller owns the string and frees it with
 * `qcc_string_free`.
 */
char *qcc_last_error_message(void);

/**
 * Crate version as a static string; do not free.
 */
const char *qcc_version(void);

/**
 * Constructs one code with default work budgets and writes an owned
 * certificate handle to `out`.
 *
 * `level` is 0 (closed-form), 1 (algebraic checks) or 2 (adds the
 * exhaustive distance oracles).
 */
enum QccStatus qcc_construct(enum QccFamily family,
                             uint64_t q,
                             uint64_t i,
                             uint8_t level,
                             struct QccCertificateHandle **out);

/**
 * As `qcc_construct`, with explicit level-2 work budgets.
 */
enum QccStatus qcc_construct_with_budgets(enum QccFamily family,
                                          uint64_t q,
                                          uint64_t i,
                                          uint8_t level,
                                          uint64_t budget_ranks,
                                          uint64_t budget_words,
                                          struct QccCertificateHandle **out);

/**
 * Whether every check required at the certificate's level ran and passed.
 *
 * # Safety
 * `cert` must be a live handle returned by a construct call.
 */
bool qcc_certificate_is_valid(const struct QccCertificateHandle *cert);

/**
 * The certificate's [(n, k, μ; γ, d_f)] parameters, written to the five
 * out-pointers. Returns false on a NULL handle.
 *
 * # Safety
 * `cert` must be a live handle; the out-pointers must be writable.
 */
bool qcc_certificate_params(const struct QccCertificateHandle *cert,
                            uint64_t *n,
                            uint64_t *k,
                            uint64_t *mu,
                            uint64_t *gamma,
                            uint64_t *d_f);

/**
 * Serializes a certificate to its JSON form. The caller frees the string
 * with `qcc_string_free`.
 *
 * # Safety
 * `cert` must be a live handle returned by a construct call.
 */
enum QccStatus qcc_certificate_json(const struct QccCertificateHandle *cert, char **out);

/**
 * Releases a certificate handle. NULL is a no-op.
 *
 * # Safety
 * `cert` must be NULL or a handle returned by a construct call, not yet
 * freed.
 */
void qcc_certificate_free(struct QccCertificateHandle *cert);

/**
 * Releases a string returned by this library. NULL is a no-op.
 *
 * # Safety
 * `s` must be NULL or a string returned by this library, not yet freed.
 */
void qcc_string_free(char *s);

/**
 * Exact quantum Singleton bound (n−k)/2·(⌊2γ/(n+k)⌋+1) + γ + 1, written to
 * `out`. Fails with a precondition status when n ≤ k or n − k is odd.
 */
enum QccStatus qcc_singleton_bound(uint64_t n, uint64_t k, uint64_t gamma, uint64_t *out);

/**
 * Parameter table of a family over `qs[0..qs_len]` as CSV, one row per
 * (q, i) in the construction's range; invalid q values become warning
 * rows. The caller frees the string with `qcc_string_free`.
 *
 * # Safety
 * `qs` must point to `qs_len` readable u64 values.
 */
enum QccStatus qcc_table_csv(enum QccFamily family,
                             const uint64_t *qs,
                             size_t qs_len,
                             uint8_t level,
                             char **out);

/**
 * Cyclotomic coset decomposition of a family context as JSON. The caller
 * frees the string with `qcc_string_free`.
 */
enum QccStatus qcc_cosets_json(enum QccFamily family, uint64_t q, char **out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QCC_H */
