#ifndef HECKE_FUSION_H
#define HECKE_FUSION_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible entry point.
 */
typedef enum HfStatus {
  /**
   * Success; the output buffer is populated.
   */
  HfOk = 0,
  /**
   * Malformed input (partition string, JSON document, coefficient).
   */
  HfParse = 1,
  /**
   * A cost guardrail was exceeded.
   */
  HfLimit = 2,
  /**
   * A requested evaluation point sits on a pole.
   */
  HfSingular = 3,
  /**
   * An unknown verification suite name.
   */
  HfUnknownSuite = 4,
  /**
   * A series whose top coefficient cannot be inverted.
   */
  HfNonInvertible = 5,
  /**
   * Filesystem failure.
   */
  HfIo = 6,
  /**
   * JSON (de)serialization failure.
   */
  HfJson = 7,
  /**
   * A required pointer argument was null.
   */
  HfNullArgument = 8,
  /**
   * A string argument was not valid UTF-8.
   */
  HfUtf8 = 9,
  /**
   * An internal invariant failed; the library state is still sound.
   */
  HfPanic = 10,
} HfStatus;

/**
 * Opaque, heap-allocated byte buffer holding a NUL-terminated JSON document.
 */
typedef struct HfBuffer HfBuffer;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static NUL-terminated string.
 */
const char *hf_version(void);

/**
 * Message for the most recent failure on this thread; empty if none.
 * The pointer stays valid until the next failing call on the same thread.
 */
const char *hf_last_error_message(void);

/**
 * Pointer to the buffer's NUL-terminated contents; null for a null buffer.
 *
 * # Safety
 * `buf` must be null or a live pointer obtained from this library.
 */
const char *hf_buffer_data(const struct HfBuffer *buf);

/**
 * Length of the buffer's contents in bytes, excluding the terminator.
 *
 * # Safety
 * `buf` must be null or a live pointer obtained from this library.
 */
uintptr_t hf_buffer_len(const struct HfBuffer *buf);

/**
 * Releases a buffer returned by this library. Null is ignored.
 *
 * # Safety
 * `buf` must be null or a pointer obtained from this library that has not
 * been freed already.
 */
void hf_buffer_free(struct HfBuffer *buf);

/**
 * Runs verification suites. `config_json` holds an object with optional
 * fields `suites` (array of names; empty means all), `max_m`, `max_n`,
 * `trunc`, `seed`, and `timings`. The result buffer holds the full report;
 * a report with failing cases is still `HfOk` — inspect `summary.failed`.
 *
 * # Safety
 * `config_json` must be null-terminated; `out` must be a valid pointer.
 */
enum HfStatus hf_verify(const char *config_json, struct HfBuffer **out);

/**
 * Computes a primitive idempotent on tensor space as a sparse triple list.
 * `tableau` indexes the standard tableaux in reading-word order. With
 * `use_fusion` false the Jucys-Murphy recurrence route is used instead of
 * the spectral-product route; both produce identical output.
 *
 * # Safety
 * `partition` must be null-terminated; `out` must be a valid pointer.
 */
enum HfStatus hf_idempotent(const char *partition,
                            uint32_t tableau,
                            uint32_t n,
                            bool use_fusion,
                            struct HfBuffer **out);

/**
 * Formal q-character of a shape: monomials in variables indexed by
 * (row value, content), with multiplicities.
 *
 * # Safety
 * `partition` must be null-terminated; `out` must be a valid pointer.
 */
enum HfStatus hf_qchar_formal(const char *partition, uint32_t n, struct HfBuffer **out);

/**
 * Tableau-sum series image of a shape over the generator algebra,
 * truncated at order `trunc`.
 *
 * # Safety
 * `partition` must be null-terminated; `out` must be a valid pointer.
 */
enum HfStatus hf_qchar_image(const char *partition,
                             uint32_t n,
                             uint32_t trunc,
                             struct HfBuffer **out);

/**
 * Eigenvalue series under a boson specialization. `kappa_json` carries the
 * same document accepted by the CLI: "kappa_plus" (one coefficient array
 * per row, entry r multiplying z^r) and "kappa_minus" (entry r multiplying
 * z^-r); the number of rows fixes the rank n.
 *
 * # Safety
 * `partition` and `kappa_json` must be null-terminated; `out` must be a
 * valid pointer.
 */
enum HfStatus hf_wakimoto(const char *partition,
                          const char *kappa_json,
                          uint32_t trunc,
                          struct HfBuffer **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HECKE_FUSION_H */
