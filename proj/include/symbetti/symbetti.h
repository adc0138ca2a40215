#ifndef SYMBETTI_H
#define SYMBETTI_H

/* C interface to symbetti. Handles are opaque; every call that can fail
 * returns a symbetti_status and leaves a message for symbetti_last_error().
 * Strings handed out by the library are released with symbetti_string_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(SYMBETTI_BUILDING)
#define SYMBETTI_API __attribute__((visibility("default")))
#else
#define SYMBETTI_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum symbetti_status {
  SYMBETTI_OK = 0,
  SYMBETTI_ERR_PARSE = 1,
  SYMBETTI_ERR_NOT_DECREASING = 2,
  SYMBETTI_ERR_NOT_PRIME = 3,
  SYMBETTI_ERR_INVALID_ARGUMENT = 4,
  SYMBETTI_ERR_SIZE_CAP = 5,
  SYMBETTI_ERR_UNDEFINED = 6,
  SYMBETTI_ERR_VERIFY_FAILED = 7,
  SYMBETTI_ERR_IO = 8,
  SYMBETTI_ERR_INTERNAL = 9
} symbetti_status;

typedef enum symbetti_format {
  SYMBETTI_FORMAT_TEXT = 0,
  SYMBETTI_FORMAT_JSON = 1
} symbetti_format;

typedef struct symbetti_ideal symbetti_ideal;
typedef struct symbetti_betti symbetti_betti;
typedef struct symbetti_stable symbetti_stable;

/* Message for the most recent failure on this thread; never NULL. */
SYMBETTI_API const char* symbetti_last_error(void);
SYMBETTI_API const char* symbetti_status_name(symbetti_status status);
SYMBETTI_API void symbetti_string_free(char* text);
SYMBETTI_API const char* symbetti_version(void);

/* ---- ideals ---- */

SYMBETTI_API symbetti_status symbetti_ideal_from_json(const char* text,
                                                      symbetti_ideal** out);
SYMBETTI_API symbetti_status symbetti_ideal_from_file(const char* path,
                                                      symbetti_ideal** out);
/* parts holds count partitions back to back; lengths[k] is the length of
 * partition k. */
SYMBETTI_API symbetti_status symbetti_ideal_from_partitions(
    const int* parts, const size_t* lengths, size_t count,
    uint32_t characteristic, symbetti_ideal** out);
SYMBETTI_API void symbetti_ideal_free(symbetti_ideal* ideal);

SYMBETTI_API size_t symbetti_ideal_warning_count(const symbetti_ideal* ideal);
SYMBETTI_API const char* symbetti_ideal_warning(const symbetti_ideal* ideal,
                                                size_t index);
SYMBETTI_API size_t symbetti_ideal_generator_count(const symbetti_ideal* ideal);
/* Writes up to capacity parts of generator index; *length gets its length. */
SYMBETTI_API symbetti_status symbetti_ideal_generator(const symbetti_ideal* ideal,
                                                      size_t index, int* parts,
                                                      size_t capacity,
                                                      size_t* length);
/* m, w, r; SYMBETTI_ERR_UNDEFINED for the zero ideal. */
SYMBETTI_API symbetti_status symbetti_ideal_stats(const symbetti_ideal* ideal,
                                                  int* m, int* w, int* r);
SYMBETTI_API uint32_t symbetti_ideal_characteristic(const symbetti_ideal* ideal);
SYMBETTI_API symbetti_status symbetti_ideal_set_characteristic(
    symbetti_ideal* ideal, uint32_t characteristic);
SYMBETTI_API symbetti_status symbetti_ideal_describe(const symbetti_ideal* ideal,
                                                     char** out);

/* ---- Betti numbers at one level ---- */

/* threads = 0 uses the hardware concurrency. */
SYMBETTI_API symbetti_status symbetti_betti_compute(const symbetti_ideal* ideal,
                                                    int n, unsigned threads,
                                                    symbetti_betti** out);
SYMBETTI_API void symbetti_betti_free(symbetti_betti* betti);
SYMBETTI_API size_t symbetti_betti_record_count(const symbetti_betti* betti);
/* degree receives n entries. */
SYMBETTI_API symbetti_status symbetti_betti_record(const symbetti_betti* betti,
                                                   size_t index, int* i,
                                                   int* degree, size_t capacity,
                                                   uint64_t* rank);
SYMBETTI_API symbetti_status symbetti_betti_pd_reg(const symbetti_betti* betti,
                                                   int* pd, int* reg);
/* Graded table (text) or the full record set (JSON). */
SYMBETTI_API symbetti_status symbetti_betti_render(const symbetti_betti* betti,
                                                   symbetti_format format,
                                                   int multigraded, char** out);

/* ---- stabilization ---- */

SYMBETTI_API symbetti_status symbetti_stable_compute(const symbetti_ideal* ideal,
                                                     unsigned threads,
                                                     symbetti_stable** out);
SYMBETTI_API void symbetti_stable_free(symbetti_stable* stable);
SYMBETTI_API int symbetti_stable_m(const symbetti_stable* stable);
SYMBETTI_API symbetti_status symbetti_stable_record_count(
    const symbetti_stable* stable, int64_t n, uint64_t* count);
SYMBETTI_API symbetti_status symbetti_stable_extrapolate(
    const symbetti_stable* stable, int64_t n, symbetti_format format, char** out);
SYMBETTI_API symbetti_status symbetti_stable_segments(const symbetti_stable* stable,
                                                      symbetti_format format,
                                                      char** out);
SYMBETTI_API symbetti_status symbetti_stable_asymptotics(
    const symbetti_stable* stable, symbetti_format format, char** out);
/* pd(I_n) and reg(I_n) for any n >= m. */
SYMBETTI_API symbetti_status symbetti_stable_pd_reg(const symbetti_stable* stable,
                                                    int64_t n, int64_t* pd,
                                                    int64_t* reg);

/* ---- invariant suite ---- */

/* Returns SYMBETTI_ERR_VERIFY_FAILED (with the report in *out) when any
 * check fails. */
SYMBETTI_API symbetti_status symbetti_verify(const symbetti_ideal* ideal,
                                             int max_n, symbetti_format format,
                                             char** out);

#ifdef __cplusplus
}
#endif

#endif /* SYMBETTI_H */
